#include <doctest.h>

#include <cmath>
#include <numbers>

#include <hyperbolic/error.hpp>
#include <hyperbolic/quadrature.hpp>
#include <hyperbolic/specfun.hpp>
#include <hyperbolic/transform.hpp>
#include <hyperbolic/verify.hpp>

using namespace hyperbolic;
constexpr double pi = std::numbers::pi;

namespace {

RadialFunction gaussian(const RadialGrid& rg, const ModelParams& mp, double a = 1.0) {
    return RadialFunction::sample(rg, mp, [a](double r) { return complex(std::exp(-a * r * r)); });
}

double sup_rel(const std::vector<complex>& a, const std::vector<complex>& b) {
    double diff = 0.0, top = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        diff = std::max(diff, std::abs(a[i] - b[i]));
        top = std::max(top, std::abs(b[i]));
    }
    return diff / top;
}

}  // namespace

TEST_CASE("grids") {
    const auto rg = make_radial_grid(16.0, 64, 16);
    double sum = 0.0;
    for (double w : rg.weights) sum += w;
    CHECK(std::abs(sum - 16.0) < 1e-10);
    for (std::size_t i = 1; i < rg.size(); ++i) CHECK(rg.nodes[i] > rg.nodes[i - 1]);
    CHECK(rg.nodes.front() > 0.0);
    const auto lg = make_spectral_grid(32.0, 16, 16);
    for (std::size_t i = 1; i < lg.size(); ++i) CHECK(lg.nodes[i] > lg.nodes[i - 1]);
    CHECK(lg.nodes.front() > 0.0);
}

TEST_CASE("transform identities") {
    for (int d : {2, 3, 4}) {
        CAPTURE(d);
        const auto e = transform_identity_errors(d);
        CHECK(e.plancherel < 1e-6);
        CHECK(e.round_trip < 1e-6);
        CHECK(e.convolution < 1e-6);
    }
}

TEST_CASE("forward transform at zero frequency in d = 3") {
    const ModelParams mp(3);
    const auto rg = make_radial_grid(8.0, 32);
    const auto f = gaussian(rg, mp);
    SpectralGrid lg;
    lg.nodes = {1e-9};
    lg.weights = {1.0};
    lg.lambda_max = 1e-9;
    const auto ft = forward_radial_ft(f, lg);
    // Φ₀(r) = r/sh r
    const auto q = composite_gauss_legendre(0.0, 8.0, 32, 16);
    double direct = 0.0;
    for (std::size_t i = 0; i < q.size(); ++i) {
        const double r = q.nodes[i];
        direct += q.weights[i] * std::exp(-r * r) * r * std::sinh(r);
    }
    direct *= mp.omega_sphere;
    CHECK(ft.values[0].real() == doctest::Approx(direct).epsilon(1e-10));
}

TEST_CASE("linearity and zero input") {
    const ModelParams mp(2);
    const auto rg = make_radial_grid(8.0, 32);
    const auto lg = make_spectral_grid(24.0, 48);
    const auto f = gaussian(rg, mp), g = gaussian(rg, mp, 2.0);
    const complex a(1.5, -0.5), b(-2.0, 0.25);
    std::vector<complex> mix(rg.size());
    for (std::size_t i = 0; i < rg.size(); ++i) mix[i] = a * f.values[i] + b * g.values[i];
    const auto fm = forward_radial_ft(RadialFunction(rg, mix, mp), lg);
    const auto ff = forward_radial_ft(f, lg), fg = forward_radial_ft(g, lg);
    std::vector<complex> expect(lg.size());
    for (std::size_t j = 0; j < lg.size(); ++j) expect[j] = a * ff.values[j] + b * fg.values[j];
    CHECK(sup_rel(fm.values, expect) < 1e-12);

    const auto zero = RadialFunction(rg, std::vector<complex>(rg.size()), mp);
    for (auto v : forward_radial_ft(zero, lg).values) CHECK(v == complex(0.0));
    const auto zs = SpectralFunction(lg, std::vector<complex>(lg.size()), mp);
    for (auto v : inverse_radial_ft(zs, rg).values) CHECK(v == complex(0.0));
}

TEST_CASE("truncation is reported") {
    const ModelParams mp(3);
    const auto rg = make_radial_grid(2.0, 8);
    const auto f = RadialFunction::sample(rg, mp, [](double) { return complex(1.0); });
    CHECK_THROWS_AS(forward_radial_ft(f, make_spectral_grid(8.0, 8)), TruncationError);
}

TEST_CASE("narrow spectral bump synthesizes one spherical function") {
    const ModelParams mp(3);
    const double l0 = 3.0, h = 0.01;
    const auto lg = make_band_grid(l0 - 12 * h, l0 + 12 * h, 8, 16);
    const double mass = 1.0 / (h * std::sqrt(pi));
    const auto ft = SpectralFunction::sample(lg, mp, [&](double l) {
        return complex(mass * std::exp(-(l - l0) * (l - l0) / (h * h)) / inversion_constant(mp));
    });
    const auto rg = make_radial_grid(4.0, 8);
    // the band grid ends where the spectrum does, so the tail check is moot
    const auto f = inverse_radial_ft(ft, rg, 1.0);
    for (std::size_t i = 0; i < rg.size(); i += 17) {
        const double expect = spherical_fn(l0, rg.nodes[i], mp).value.real() * plancherel_density(l0, mp);
        CHECK(std::abs(f.values[i].real() - expect) < 1e-3);
    }
}

TEST_CASE("convolution") {
    const ModelParams mp(3);
    const auto rg = make_radial_grid(6.0, 6);
    const auto f = gaussian(rg, mp), k = gaussian(rg, mp, 3.0);
    const auto fk = radial_convolution(f, k);
    const auto kf = radial_convolution(k, f);
    CHECK(sup_rel(fk.values, kf.values) < 1e-8);

    // mass-one narrow kernel acts as an approximate identity
    const double a = 100.0;
    double mass = 0.0;
    const auto q = composite_gauss_legendre(0.0, 1.0, 16, 16);
    for (std::size_t i = 0; i < q.size(); ++i)
        mass += q.weights[i] * mp.omega_sphere * std::exp(-a * q.nodes[i] * q.nodes[i]) * std::pow(std::sinh(q.nodes[i]), 2);
    const auto approx = radial_convolution(f, [&](double r) { return complex(std::exp(-a * r * r) / mass); });
    CHECK(sup_rel(approx.values, f.values) < 5e-2);
}

TEST_CASE("kernel calibration") {
    CHECK(kOddKernelCalibration == 1.0);
    CHECK(kEvenKernelCalibration == 1.0);
    for (int d = 2; d <= 5; ++d) {
        CAPTURE(d);
        CHECK(kernel_calibration_error(d) < 1e-6);
    }
    MultiplierSymbol zero;
    zero.eval = [](double) { return complex(0.0); };
    zero.hat = [](const KernelJet& r) { return 0.0 * r; };
    zero.hat_support = 1.0;
    for (int d : {2, 3}) {
        const auto K = multiplier_kernel(zero, make_radial_grid(4.0, 4), ModelParams(d));
        for (auto v : K.values) CHECK(v == complex(0.0));
    }
}

TEST_CASE("dyadic building blocks") {
    for (double xi = 0.0; xi < 6.0; xi += 0.01) {
        if (xi < 1.0 || xi > 4.0) CHECK(std::abs(dyadic_psi_hat(xi)) < 1e-10);
        if (xi <= 1.0) CHECK(bump_beta(xi) == 1.0);
        if (xi >= 2.0) CHECK(bump_beta(xi) == 0.0);
        CHECK(bump_beta(-xi) == bump_beta(xi));
    }
    const auto q = composite_gauss_legendre(-400.0, 400.0, 800, 16);
    double integral = 0.0;
    for (std::size_t i = 0; i < q.size(); ++i) integral += q.weights[i] * dyadic_chi(q.nodes[i]);
    CHECK(std::abs(integral - 1.0) < 1e-6);
    for (double x : {0.0, 0.3, 2.0, 7.5}) CHECK(dyadic_psi(x) == doctest::Approx(2 * dyadic_chi(2 * x) - dyadic_chi(x)).epsilon(1e-12));

    for (double L : {8.0, 16.0, 32.0, 100.0}) {
        const int k0 = dyadic_k0(L);
        const double scale = std::ldexp(1.0, k0) * L;
        CHECK(scale >= 0.5);
        CHECK(scale <= 2.0);
    }
}

TEST_CASE("dyadic symbols telescope to point masses") {
    const double L = 8.0;
    const int k0 = dyadic_k0(L);
    auto g = [&](double l) { return std::exp(-(l - L) * (l - L) / 4.0) * std::cos(l); };
    const auto q = composite_gauss_legendre(L - 16.0, L + 16.0, 512, 16);
    std::vector<double> partial(q.size(), 0.0);
    for (std::size_t i = 0; i < q.size(); ++i) partial[i] = dyadic_symbol({L, k0, DyadicKind::J})(q.nodes[i]).real();
    double prev = 1e300;
    for (int k1 = k0; k1 <= k0 + 6; ++k1) {
        const auto m = dyadic_symbol({L, k1, DyadicKind::K});
        double integral = 0.0;
        for (std::size_t i = 0; i < q.size(); ++i) {
            partial[i] += m(q.nodes[i]).real();
            integral += q.weights[i] * partial[i] * g(q.nodes[i]);
        }
        const double err = std::abs(integral - g(L));
        CAPTURE(k1);
        if (prev > 1e-13) CHECK(err < prev);
        prev = err;
    }
    CHECK(prev < 1e-6);
}

TEST_CASE("symbol evenness") {
    for (auto kind : {DyadicKind::J, DyadicKind::K}) {
        const auto m = dyadic_symbol({16.0, dyadic_k0(16.0) + 1, kind});
        for (double l : {0.5, 15.0, 16.3, 20.0}) CHECK(std::abs(m(l) - m(-l)) < 1e-14);
    }
}

TEST_CASE("dyadic kernel bounds are stable across frequencies") {
    for (int d : {2, 3}) {
        std::vector<DyadicBoundFit> fits;
        for (double L : {8.0, 16.0, 32.0}) fits.push_back(fit_dyadic_kernel_bounds(L, d));
        double jmin = 1e300, jmax = 0.0, kmin = 1e300, kmax = 0.0;
        for (const auto& f : fits) {
            jmin = std::min(jmin, f.c_J), jmax = std::max(jmax, f.c_J);
            kmin = std::min(kmin, f.c_K), kmax = std::max(kmax, f.c_K);
            CHECK(f.outside < 1e-12);
            if (d == 3) CHECK(f.c_tail == 0.0);
        }
        CAPTURE(d);
        CHECK(jmax / jmin < 2.0);
        CHECK(kmax / kmin < 2.0);
    }
}

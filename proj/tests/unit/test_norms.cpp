#include <doctest.h>

#include <cmath>
#include <random>
#include <utility>
#include <vector>

#include <hyperbolic/error.hpp>
#include <hyperbolic/norms.hpp>
#include <hyperbolic/quadrature.hpp>
#include <hyperbolic/verify.hpp>

using namespace hyperbolic;

namespace {

double ball_volume(double R, const ModelParams& mp) {
    const auto q = composite_gauss_legendre(0.0, R, 8, 16);
    double v = 0.0;
    for (std::size_t i = 0; i < q.size(); ++i) v += q.weights[i] * std::pow(std::sinh(q.nodes[i]), 2.0 * mp.rho);
    return mp.omega_sphere * v;
}

}  // namespace

TEST_CASE("spherical functions are never square integrable") {
    for (int d : {2, 3, 4})
        for (double l : {1.0, 8.0}) {
            const auto n = spherical_lp_norm(l, 2.0, ModelParams(d));
            CHECK(n.divergent);
            CHECK(std::isinf(n.value));
        }
}

TEST_CASE("spherical L4 norm scaling in d = 3") {
    const ModelParams mp(3);
    std::vector<std::pair<double, double>> pts;
    for (double l : {8.0, 16.0, 32.0, 64.0}) {
        const auto n = spherical_lp_norm(l, 4.0, mp);
        REQUIRE(n.finite());
        pts.emplace_back(l, n.value);
    }
    CHECK(fit_scaling_exponent(pts).slope == doctest::Approx(-0.75).epsilon(0.02));
}

TEST_CASE("ball volume and Hölder") {
    for (int d : {2, 3}) {
        const ModelParams mp(d);
        const double R = 1.5;
        const auto rg = make_radial_grid(2 * R, 16, 16);
        const auto ind = RadialFunction::sample(rg, mp, [&](double r) { return complex(r < R ? 1.0 : 0.0); });
        const double V = ball_volume(R, mp);
        CHECK(lp_norm_polar(ind, 1.0).value == doctest::Approx(V).epsilon(1e-12));

        std::mt19937_64 rng(7 + d);
        std::uniform_real_distribution<double> u(-1.0, 1.0);
        for (int trial = 0; trial < 20; ++trial) {
            std::vector<complex> v(rg.size());
            for (std::size_t i = 0; i < rg.size(); ++i) v[i] = rg.nodes[i] < R ? complex(u(rng), u(rng)) : 0.0;
            const RadialFunction f(rg, v, mp);
            const double a = lp_norm_polar(f, 1.5).value, b = lp_norm_polar(f, 4.0).value;
            CHECK(a <= std::pow(V, 1.0 / 1.5 - 1.0 / 4.0) * b * (1 + 1e-12));
            CHECK(lp_norm_polar(f, 4.0).value <= std::pow(V, 0.25) * lp_norm_polar(f, INFINITY).value * (1 + 1e-12));
        }
    }
}

TEST_CASE("refinement stability") {
    const ModelParams mp(3);
    auto norm = [&](int panels) {
        const auto rg = make_radial_grid(12.0, panels);
        return lp_norm_polar(RadialFunction::sample(rg, mp, [](double r) { return complex(std::exp(-r * r) * std::cos(3 * r)); }), 3.0)
            .value;
    };
    CHECK(std::abs(norm(32) / norm(64) - 1.0) < 1e-4);
}

TEST_CASE("iwasawa norms") {
    const ModelParams mp(2);
    const IwasawaRegion box{0.0, 1.0, 0.0, 1.0, false};
    CHECK(lp_norm_iwasawa([](const IwasawaPoint&) { return complex(1.0); }, 1.0, box, mp) ==
          doctest::Approx(1.0 - std::exp(-1.0)).epsilon(1e-13));

    // a smooth compactly supported radial function in both charts
    for (int d : {2, 3}) {
        const ModelParams m(d);
        auto bump = [](double r) { return r < 1.0 ? std::exp(-1.0 / (1.0 - r * r)) : 0.0; };
        const auto rg = make_radial_grid(2.0, 32);
        const auto polar = lp_norm_polar(RadialFunction::sample(rg, m, [&](double r) { return complex(bump(r)); }), 2.0).value;
        const auto origin = AmbientPoint::origin(d);
        auto F = [&](const IwasawaPoint& x) { return complex(bump(geodesic_distance(iwasawa_to_ambient(x, m), origin))); };
        const IwasawaRegion cover{-1.1, 1.1, 0.0, 3.5, true};
        const double iw = lp_norm_iwasawa(F, 2.0, cover, m, 256, 256);
        CAPTURE(d);
        CHECK(iw == doctest::Approx(polar).epsilon(1e-4));
    }
}

TEST_CASE("knapp region volume growth") {
    // ∫ e^{ρps} over the Knapp region with δ = λ^{−1/2} scales like λ^{−ρ}
    for (int d : {2, 3}) {
        const ModelParams mp(d);
        const double p = 4.0;
        std::vector<std::pair<double, double>> pts;
        for (double l : {16.0, 32.0, 64.0}) {
            const auto region = knapp_region(l, 1.0 / std::sqrt(l), p, mp);
            const double n = lp_norm_iwasawa([&](const IwasawaPoint& x) { return complex(std::exp(mp.rho * x.s)); }, p, region, mp);
            pts.emplace_back(l, std::pow(n, p));
        }
        CHECK(fit_scaling_exponent(pts).slope == doctest::Approx(-mp.rho).epsilon(1e-3));
    }
}

TEST_CASE("sphere norms") {
    for (int d : {2, 3}) {
        const ModelParams mp(d);
        const auto g = SphereFunction::sample(make_sphere_grid(d, 64), [](std::span<const double>) { return complex(1.0); });
        CHECK(sphere_lp_norm(g, 2.0) == doctest::Approx(std::sqrt(mp.omega_sphere)).epsilon(1e-12));
    }
    for (double delta : {0.1, 0.01}) {
        const auto cap = knapp_cap(delta, 2, 32);
        const double arc = 4.0 * std::asin(delta / 2.0);
        CHECK(sphere_lp_norm(cap, 2.0) == doctest::Approx(std::sqrt(arc)).epsilon(1e-12));
        CHECK(std::abs(sphere_lp_norm(cap, 2.0) / std::sqrt(2 * delta) - 1.0) < delta * delta);
        for (double p : {1.5, 3.0, 6.0}) CHECK(sphere_lp_norm(cap, p) == doctest::Approx(std::pow(sphere_lp_norm(cap, 1.0), 1.0 / p)).epsilon(1e-12));
    }
}

TEST_CASE("scaling fits") {
    std::vector<std::pair<double, double>> exact, perturbed, flat;
    for (double l : {8.0, 16.0, 32.0, 64.0}) {
        exact.emplace_back(l, 7.0 * std::pow(l, 1.5));
        perturbed.emplace_back(l, l * l * (1.0 + 0.1 / l));
        flat.emplace_back(l, 3.0);
    }
    const auto e = fit_scaling_exponent(exact);
    CHECK(e.slope == doctest::Approx(1.5).epsilon(1e-13));
    CHECK(e.max_residual < 1e-12);
    CHECK(std::exp(e.intercept) == doctest::Approx(7.0).epsilon(1e-12));
    CHECK(std::abs(fit_scaling_exponent(perturbed).slope - 2.0) < 0.02);
    CHECK(std::abs(fit_scaling_exponent(flat).slope) < 1e-14);

    auto bad = exact;
    bad[1].second = 0.0;
    CHECK_THROWS_AS(fit_scaling_exponent(bad), DomainError);
    CHECK_THROWS_AS(fit_scaling_exponent(std::span(exact).first(2)), InvalidArgument);
    const std::vector<std::pair<double, double>> narrow{{8.0, 1.0}, {10.0, 2.0}, {12.0, 3.0}};
    CHECK_THROWS_AS(fit_scaling_exponent(narrow), InvalidArgument);
}

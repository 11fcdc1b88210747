#include <doctest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include <hyperbolic/error.hpp>
#include <hyperbolic/specfun.hpp>

using namespace hyperbolic;
constexpr double pi = std::numbers::pi;

TEST_CASE("log gamma") {
    CHECK(std::abs(log_gamma_complex(1.0)) < 1e-14);
    CHECK(std::abs(log_gamma_complex(2.0)) < 1e-14);
    CHECK(std::abs(log_gamma_complex(0.5) - std::log(std::sqrt(pi))) < 1e-14);
    CHECK(std::abs(log_gamma_complex(10.0) - std::log(362880.0)) < 1e-12);
    CHECK(std::abs(log_gamma_complex(-0.5) - std::log(2.0 * std::sqrt(pi)) - complex(0.0, pi)) < 1e-13);
    // log Γ(z+1) = log z + log Γ(z) modulo 2πi
    for (complex z : {complex(0.3, 0.7), complex(2.5, -4.0), complex(-3.2, 1.1), complex(0.1, 300.0)}) {
        const complex diff = log_gamma_complex(z + 1.0) - std::log(z) - log_gamma_complex(z);
        CHECK(std::abs(diff.real()) < 1e-10);
        const double k = diff.imag() / (2 * pi);
        CHECK(std::abs(k - std::round(k)) < 1e-10);
    }
    for (double pole : {0.0, -1.0, -7.0}) CHECK_THROWS_AS(log_gamma_complex(pole), DomainError);
}

TEST_CASE("plancherel density closed forms") {
    const ModelParams m3(3), m2(2);
    for (double l : {0.01, 0.5, 1.0, 3.0, 17.0, 250.0, 1000.0}) {
        CHECK(plancherel_density(l, m3) == doctest::Approx(l * l).epsilon(1e-10));
        CHECK(plancherel_density(l, m2) == doctest::Approx(pi * l * std::tanh(pi * l)).epsilon(1e-10));
    }
    CHECK(plancherel_density(0.0, m3) == 0.0);
    const auto c = harish_chandra_c(2.0, m3);
    CHECK(c.density == doctest::Approx(4.0).epsilon(1e-12));
    CHECK(std::abs(c.c_value - complex(0.0, -0.5)) < 1e-12);
}

TEST_CASE("density growth and monotonicity") {
    for (int d = 2; d <= 5; ++d) {
        const ModelParams mp(d);
        double prev = 0.0;
        for (double l = 0.05; l < 60.0; l *= 1.3) {
            const double v = plancherel_density(l, mp);
            CHECK(v > prev);
            prev = v;
        }
        // |c(λ)|^{-1}/λ^ρ settles to a constant
        auto ratio = [&](double l) { return std::sqrt(plancherel_density(l, mp)) / std::pow(l, mp.rho); };
        CHECK(std::abs(ratio(400.0) / ratio(800.0) - 1.0) < 1e-3);
    }
}

TEST_CASE("inversion constant") {
    CHECK(inversion_constant(ModelParams(3)) == doctest::Approx(1.0 / (2 * pi * pi)).epsilon(1e-14));
    CHECK(inversion_constant(ModelParams(2)) == doctest::Approx(1.0 / (2 * pi * pi)).epsilon(1e-14));
}

TEST_CASE("spherical function values") {
    const ModelParams m3(3), m2(2);
    for (double l : {0.5, 2.0, 9.0}) CHECK(std::abs(spherical_fn(l, 0.0, m3).value - 1.0) < 1e-14);
    CHECK(spherical_fn(2.0, 1.0, m3).value.real() == doctest::Approx(0.38686883).epsilon(1e-7));
    for (double l : {1.0, 8.0, 64.0})
        for (double r : {0.01, 0.7, 3.0, 10.0}) {
            const double exact = std::sin(l * r) / (l * std::sinh(r));
            CHECK(std::abs(spherical_fn(l, r, m3).value.real() - exact) < 1e-10);
            SphericalOptions cf;
            cf.closed_form_d3 = true;
            const auto e = spherical_fn(l, r, m3, cf);
            CHECK(e.method == SphericalMethod::ClosedFormD3);
            CHECK(std::abs(e.value.real() - exact) < 1e-14);
        }

    // Φ_λ(r) on H² as the S¹ average of the plane wave [x, b(ω)]^{iλ−1/2}
    const double l = 5.0, r = 2.0;
    const int n = 4096;
    complex avg = 0.0;
    for (int j = 0; j < n; ++j) {
        const double th = 2 * pi * j / n;
        avg += std::exp(complex(-0.5, l) * std::log(std::cosh(r) - std::sinh(r) * std::cos(th)));
    }
    avg /= double(n);
    CHECK(std::abs(spherical_fn(l, r, m2).value - avg) < 1e-8);
}

TEST_CASE("spherical function invariants") {
    for (int d = 2; d <= 5; ++d) {
        const ModelParams mp(d);
        for (double l : {0.3, 2.0, 12.0})
            for (double r : {0.2, 1.0, 4.0}) {
                const auto v = spherical_fn(l, r, mp).value;
                CHECK(std::abs(v.imag()) < 1e-12);
                CHECK(std::abs(v) <= 1.0 + 1e-12);
                CHECK(std::abs(spherical_fn(-l, r, mp).value - v) < 1e-11);
            }
    }
}

TEST_CASE("large-lambda asymptotics") {
    const ModelParams m3(3);
    for (double l : {4.0, 32.0})
        for (double r : {0.5, 2.0})
            CHECK(spherical_asymptotic(l, r, m3) == doctest::Approx(std::sin(l * r) / (l * std::sinh(r))).epsilon(1e-12));
    for (int d : {2, 4, 5}) {
        const ModelParams mp(d);
        for (double r : {0.5, 2.0}) {
            // residual × λ^{ρ+1} stays bounded as λ doubles
            double worst = 0.0;
            for (double l : {32.0, 64.0, 128.0, 256.0}) {
                const double res = spherical_fn(l, r, mp).value.real() - spherical_asymptotic(l, r, mp);
                worst = std::max(worst, std::abs(res) * std::pow(l, mp.rho + 1.0));
            }
            CHECK(worst < 50.0);
        }
    }
}

TEST_CASE("spherical table agrees with direct evaluation") {
    for (int d : {2, 3, 4}) {
        const ModelParams mp(d);
        const std::vector<double> lambdas{0.25, 1.0, 3.5, 20.0};
        const std::vector<double> radii{0.0, 0.4, 1.6, 5.0, 12.0};
        const SphericalTable t(mp, lambdas, radii);
        REQUIRE(t.radii() == radii.size());
        REQUIRE(t.lambdas() == lambdas.size());
        for (std::size_t i = 0; i < radii.size(); ++i)
            for (std::size_t j = 0; j < lambdas.size(); ++j)
                CHECK(std::abs(t(i, j) - spherical_fn(lambdas[j], radii[i], mp).value.real()) < 1e-10);
    }
}

TEST_CASE("log sinh") {
    CHECK(log_sinh(1.0) == doctest::Approx(std::log(std::sinh(1.0))).epsilon(1e-15));
    CHECK(log_sinh(1000.0) == doctest::Approx(1000.0 - std::log(2.0)).epsilon(1e-15));
}

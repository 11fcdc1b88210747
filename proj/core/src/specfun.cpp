#include "hyperbolic/specfun.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <numbers>
#include <sstream>

#include "hyperbolic/error.hpp"
#include "hyperbolic/quadrature.hpp"

namespace hyperbolic {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kLanczosG = 607.0 / 128.0;
constexpr std::array<double, 15> kLanczos = {
    0.99999999999999709182,     57.156235665862923517,      -59.597960355475491248,
    14.136097974741747174,      -0.49191381609762019978,    .33994649984811888699e-4,
    .46523628927048575665e-4,   -.98374475304879564677e-4,  .15808870322491248884e-3,
    -.21026444172410488319e-3,  .21743961811521264320e-3,   -.16431810653676389022e-3,
    .84418223983852743293e-4,   -.26190838401581408670e-4,  .36899182659531622704e-5,
};

complex lanczos(complex z) {
    z -= 1.0;
    complex x = kLanczos[0];
    for (std::size_t k = 1; k < kLanczos.size(); ++k) x += kLanczos[k] / (z + static_cast<double>(k));
    const complex t = z + kLanczosG + 0.5;
    return 0.5 * std::log(2.0 * kPi) + (z + 0.5) * std::log(t) - t + std::log(x);
}

// 2^{ρ−1}Γ(ρ+½)/(√π Γ(ρ))
double spherical_prefactor(double rho) {
    return std::exp((rho - 1.0) * std::log(2.0) + std::lgamma(rho + 0.5) - 0.5 * std::log(kPi) - std::lgamma(rho));
}

// Weights g_i w_i and phases (r − u_i²) for ∫₀^r cos(λs)(ch r − ch s)^{ρ−1} ds
// scaled by the full prefactor of Φ, so that Φ = Σ gw_i cos(λ·phase_i).
struct SphericalRule {
    std::vector<double> phase;
    std::vector<double> gw;
};

SphericalRule spherical_rule(double r, double rho, int panels) {
    const auto q = composite_gauss_legendre(0.0, std::sqrt(r), panels, 16);
    const double log_pre = std::log(2.0 * spherical_prefactor(rho)) - (2.0 * rho - 1.0) * log_sinh(r);
    SphericalRule rule;
    rule.phase.resize(q.size());
    rule.gw.resize(q.size());
    for (std::size_t i = 0; i < q.size(); ++i) {
        const double u = q.nodes[i];
        const double u2 = u * u;
        // ch r − ch s = 2 sh((r+s)/2) sh((r−s)/2), s = r − u²
        const double log_gap = std::log(2.0) + log_sinh(r - 0.5 * u2) + log_sinh(0.5 * u2);
        rule.phase[i] = r - u2;
        rule.gw[i] = q.weights[i] * 2.0 * u * std::exp(log_pre + (rho - 1.0) * log_gap);
    }
    return rule;
}

double apply_rule(const SphericalRule& rule, double lambda) {
    double acc = 0.0;
    for (std::size_t i = 0; i < rule.gw.size(); ++i) acc += rule.gw[i] * std::cos(lambda * rule.phase[i]);
    return acc;
}

int panels_for(double lambda, double r, std::size_t nodes_floor) {
    const double nodes = std::max(static_cast<double>(nodes_floor), 12.0 * std::abs(lambda) * r / kPi);
    return static_cast<int>(std::ceil(nodes / 16.0));
}

// Φ = 2 Re[c(λ)(2 ch r)^{iλ−ρ} ₂F₁((ρ−iλ)/2, (ρ+1−iλ)/2; 1−iλ; 1/ch² r)]
double hc_series(double lambda, double r, double rho, complex c_value) {
    const complex a(0.5 * rho, -0.5 * lambda);
    const complex b(0.5 * (rho + 1.0), -0.5 * lambda);
    const complex c(1.0, -lambda);
    const double e = std::exp(-2.0 * r);
    const double z = 4.0 * e / ((1.0 + e) * (1.0 + e));
    complex term = 1.0, sum = 1.0;
    for (int n = 0; n < 4000; ++n) {
        term *= (a + double(n)) * (b + double(n)) / ((c + double(n)) * double(n + 1)) * z;
        sum += term;
        if (std::abs(term) < 1e-17 * std::abs(sum)) break;
    }
    const double log_2ch = r + std::log1p(e);
    return 2.0 * (c_value * std::exp(complex(-rho, lambda) * log_2ch) * sum).real();
}

}  // namespace

double log_sinh(double x) {
    if (!(x > 0.0)) throw DomainError("log_sinh: argument must be positive");
    if (x > 20.0) return x - std::log(2.0) + std::log1p(-std::exp(-2.0 * x));
    return std::log(std::sinh(x));
}

namespace {

// log sin(πz), safe for large |Im z| (defined up to 2πi).
complex log_sin_pi(complex z) {
    if (z.imag() < 0.0) return std::conj(log_sin_pi(std::conj(z)));
    if (z.imag() < 20.0) return std::log(std::sin(kPi * z));
    // sin πz = (i/2) e^{−iπz} (1 − e^{2iπz})
    const complex ipz(0.0, kPi);
    return std::log(complex(0.0, 0.5)) - ipz * z + std::log(1.0 - std::exp(2.0 * ipz * z));
}

}  // namespace

complex log_gamma_complex(complex z) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) throw DomainError("log_gamma_complex: non-finite argument");
    if (z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::floor(z.real())) {
        std::ostringstream os;
        os << "log_gamma_complex: pole at z = " << z.real();
        throw DomainError(os.str());
    }
    if (z.real() < 0.5) {
        // Γ(z)Γ(1−z) = π / sin(πz)
        const complex lg = std::log(kPi) - log_sin_pi(z) - log_gamma_complex(1.0 - z);
        // Real negative z: Im is 0 or π depending on the sign of Γ.
        if (z.imag() == 0.0) return {lg.real(), std::sin(kPi * z.real()) < 0.0 ? kPi : 0.0};
        return lg;
    }
    return lanczos(z);
}

CFunctionEval harish_chandra_c(double lambda, const ModelParams& mp) {
    if (!(lambda > 0.0)) throw DomainError("harish_chandra_c: λ must be positive");
    const double rho = mp.rho;
    const double log_pre = (2.0 * rho - 1.0) * std::log(2.0) + std::lgamma(rho + 0.5) - 0.5 * std::log(kPi);
    const complex lc = log_pre + log_gamma_complex(complex(0.0, lambda)) - log_gamma_complex(complex(rho, lambda));
    const complex c = std::exp(lc);
    return {lambda, c, std::exp(-2.0 * lc.real())};
}

double plancherel_density(double lambda, const ModelParams& mp) {
    const double a = std::abs(lambda);
    if (a == 0.0) return 0.0;
    return harish_chandra_c(a, mp).density;
}

double inversion_constant(const ModelParams& mp) {
    return std::pow(2.0, mp.d - 1) / (2.0 * kPi * mp.omega_sphere);
}

SphericalEval spherical_fn(double lambda, double r, const ModelParams& mp, const SphericalOptions& opt) {
    if (r < 0.0 || !std::isfinite(r)) throw InvalidArgument("spherical_fn: r must be finite and non-negative");
    if (!std::isfinite(lambda)) throw InvalidArgument("spherical_fn: λ must be finite");
    if (r == 0.0) return {lambda, r, 1.0, SphericalMethod::ExactQuadrature};
    if (opt.closed_form_d3 && mp.d == 3) {
        const double v = lambda == 0.0 ? r / std::sinh(r) : std::sin(lambda * r) / (lambda * std::sinh(r));
        return {lambda, r, v, SphericalMethod::ClosedFormD3};
    }
    int panels = panels_for(lambda, r, 64);
    double prev = apply_rule(spherical_rule(r, mp.rho, panels), lambda);
    double err = INFINITY;
    while (static_cast<std::size_t>(panels) * 32 <= opt.max_nodes) {
        panels *= 2;
        const double cur = apply_rule(spherical_rule(r, mp.rho, panels), lambda);
        err = std::abs(cur - prev);
        prev = cur;
        if (err <= opt.tolerance) return {lambda, r, cur, SphericalMethod::ExactQuadrature};
    }
    std::ostringstream os;
    os << "spherical_fn: no convergence for λ = " << lambda << ", r = " << r;
    throw AccuracyError(os.str(), err);
}

double spherical_asymptotic(double lambda, double r, const ModelParams& mp) {
    if (!(lambda > 1.0)) throw DomainError("spherical_asymptotic: λ must exceed 1");
    if (!(r > 1.0 / lambda)) throw DomainError("spherical_asymptotic: r must exceed 1/λ");
    const double rho = mp.rho;
    const double log_amp = rho * std::log(2.0) + std::lgamma(rho + 0.5) - 0.5 * std::log(kPi) -
                           rho * (std::log(lambda) + log_sinh(r));
    return std::exp(log_amp) * std::cos(lambda * r - 0.5 * rho * kPi);
}

double spherical_series(double lambda, double r, const ModelParams& mp) {
    const double a = std::abs(lambda);
    return hc_series(a, r, mp.rho, harish_chandra_c(a, mp).c_value);
}

SphericalTable::SphericalTable(const ModelParams& mp, std::span<const double> lambdas, std::span<const double> radii)
    : nr_(radii.size()), nl_(lambdas.size()), values_(radii.size() * lambdas.size()) {
    std::vector<complex> cvals(nl_);
    for (std::size_t j = 0; j < nl_; ++j)
        if (std::abs(lambdas[j]) >= 1.0) cvals[j] = harish_chandra_c(std::abs(lambdas[j]), mp).c_value;
    const double rho = mp.rho;
    for (std::size_t i = 0; i < nr_; ++i) {
        const double r = radii[i];
        double* row = values_.data() + i * nl_;
        if (r == 0.0) {
            std::fill(row, row + nl_, 1.0);
            continue;
        }
        std::map<int, SphericalRule> rules;
        for (std::size_t j = 0; j < nl_; ++j) {
            const double lambda = std::abs(lambdas[j]);
            if (r >= 1.5 && lambda >= 1.0) {
                row[j] = hc_series(lambda, r, rho, cvals[j]);
                continue;
            }
            // Power-of-two panel levels with a 1.5× margin over 12 nodes per period.
            const int need = std::max(4, static_cast<int>(std::ceil(1.5 * 12.0 * lambda * r / kPi / 16.0)));
            int level = 4;
            while (level < need) level *= 2;
            auto it = rules.find(level);
            if (it == rules.end()) it = rules.emplace(level, spherical_rule(r, rho, level)).first;
            row[j] = apply_rule(it->second, lambda);
        }
    }
}

}  // namespace hyperbolic

#include "hyperbolic/operators.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "hyperbolic/error.hpp"
#include "hyperbolic/quadrature.hpp"
#include "hyperbolic/specfun.hpp"

namespace hyperbolic {

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kMaxPhaseStep = 2.0 * kPi / 12.0;

double inv_abs_c(double lambda, const ModelParams& mp) { return std::sqrt(harish_chandra_c(lambda, mp).density); }
}  // namespace

RadialFunction apply_multiplier(const MultiplierSymbol& m, const RadialFunction& f, const SpectralGrid& lg) {
    auto ft = forward_radial_ft(f, lg);
    for (std::size_t j = 0; j < lg.size(); ++j) ft.values[j] *= m(lg.nodes[j]);
    return inverse_radial_ft(ft, f.grid);
}

complex radial_transform_at(double lambda, const RadialFunction& f) {
    const double l = std::abs(lambda);
    const std::vector<double> ls{l};
    SphericalTable table(f.params, ls, f.grid.nodes);
    complex acc = 0.0;
    for (std::size_t i = 0; i < f.size(); ++i) {
        const double r = f.grid.nodes[i];
        acc += f.grid.weights[i] * std::exp(2.0 * f.params.rho * log_sinh(r)) * table(i, 0) * f.values[i];
    }
    return f.params.omega_sphere * acc;
}

RadialFunction spectral_projector_radial(double lambda, const RadialFunction& f) {
    if (!(lambda > 0.0)) throw DomainError("spectral_projector_radial: λ must be positive");
    const complex coef = harish_chandra_c(lambda, f.params).density * radial_transform_at(lambda, f);
    const std::vector<double> ls{lambda};
    SphericalTable table(f.params, ls, f.grid.nodes);
    std::vector<complex> out(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) out[i] = coef * table(i, 0);
    return RadialFunction(f.grid, std::move(out), f.params);
}

namespace {

// Shared body: log_bracket(i) gives ln[x, b(ω_i)] for the current point.
template <class LogBracket>
complex extension_at(double lambda, const SphereFunction& g, const ModelParams& mp, LogBracket&& log_bracket,
                     std::vector<double>& scratch) {
    const auto& grid = g.grid;
    scratch.resize(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) scratch[i] = g.values[i] == 0.0 ? 0.0 : log_bracket(i);
    for (const auto& [a, b] : grid.neighbours) {
        if (g.values[a] == 0.0 || g.values[b] == 0.0) continue;
        const double step = std::abs(lambda * (scratch[a] - scratch[b]));
        if (step > kMaxPhaseStep) {
            std::ostringstream os;
            os << "extension_operator: sphere grid under-resolved (phase step " << step << " > 2π/12)";
            throw AccuracyError(os.str(), step);
        }
    }
    complex acc = 0.0;
    for (std::size_t i = 0; i < grid.size(); ++i) {
        if (g.values[i] == 0.0) continue;
        // conj(h) = exp((−iλ−ρ) ln[x,b])
        acc += grid.weights[i] * g.values[i] * std::exp(complex(-mp.rho, -lambda) * scratch[i]);
    }
    return acc * inv_abs_c(lambda, mp) / mp.omega_sphere;
}

}  // namespace

std::vector<complex> extension_operator(double lambda, const SphereFunction& g, std::span<const AmbientPoint> points) {
    const int d = g.grid.d;
    if (d != 2 && d != 3) throw InvalidArgument("extension_operator: d must be 2 or 3");
    if (!(lambda > 0.0)) throw DomainError("extension_operator: λ must be positive");
    const ModelParams mp(d);
    std::vector<complex> out;
    out.reserve(points.size());
    std::vector<double> scratch;
    for (const auto& x : points) {
        if (x.dimension() != d) throw InvalidArgument("extension_operator: point dimension mismatch");
        out.push_back(extension_at(lambda, g, mp, [&](std::size_t i) {
            const auto w = g.grid.node(i);
            double form = x[0];
            for (int k = 0; k < d; ++k) form -= x[k + 1] * w[k];
            return std::log(form);
        }, scratch));
    }
    return out;
}

std::vector<complex> extension_operator(double lambda, const SphereFunction& g, std::span<const IwasawaPoint> points) {
    const int d = g.grid.d;
    if (d != 2 && d != 3) throw InvalidArgument("extension_operator: d must be 2 or 3");
    if (!(lambda > 0.0)) throw DomainError("extension_operator: λ must be positive");
    const ModelParams mp(d);
    std::vector<complex> out;
    out.reserve(points.size());
    std::vector<double> scratch;
    for (const auto& x : points) {
        out.push_back(extension_at(lambda, g, mp, [&](std::size_t i) { return log_bracket_iwasawa(x, g.grid.node(i)); },
                                   scratch));
    }
    return out;
}

namespace {

// ∫ f h_{λ,ω} dx using every `stride`-th angular node.
complex helgason_d2_strided(double lambda, double theta, const PolarFunction& f, int stride) {
    const auto& rg = f.radial;
    const int nt = f.n_theta;
    const double dphi = 2.0 * kPi / nt * stride;
    complex acc = 0.0;
    for (std::size_t i = 0; i < rg.size(); ++i) {
        const double r = rg.nodes[i];
        const double sh = std::sinh(r);
        complex ring = 0.0;
        for (int j = 0; j < nt; j += stride) {
            const complex v = f.values[i * nt + j];
            if (v == 0.0) continue;
            // [x, b(ω)] = ch r − sh r cos(φ − θ), written without cancellation.
            const double half = std::sin(0.5 * (f.theta(j) - theta));
            const double bracket = std::exp(-r) + 2.0 * sh * half * half;
            ring += v * std::exp(complex(-0.5, lambda) * std::log(bracket));
        }
        acc += rg.weights[i] * sh * dphi * ring;
    }
    return acc;
}

}  // namespace

complex helgason_transform_d2(double lambda, double theta, const PolarFunction& f) {
    return helgason_d2_strided(lambda, theta, f, 1);
}

SphereFunction restriction_operator_d2(double lambda, const PolarFunction& f, const SphereGrid& out) {
    if (out.d != 2) throw InvalidArgument("restriction_operator_d2: output grid must be on S¹");
    if (!(lambda > 0.0)) throw DomainError("restriction_operator_d2: λ must be positive");
    if (f.n_theta % 2 != 0) throw InvalidArgument("restriction_operator_d2: n_theta must be even");
    const ModelParams mp(2);
    const double scale = inv_abs_c(lambda, mp);
    std::vector<complex> values(out.size());
    double worst = 0.0, norm = 0.0;
    for (std::size_t k = 0; k < out.size(); ++k) {
        const auto w = out.node(k);
        const double theta = std::atan2(w[1], w[0]);
        const complex full = helgason_d2_strided(lambda, theta, f, 1);
        const complex half = helgason_d2_strided(lambda, theta, f, 2);
        worst = std::max(worst, std::abs(full - half));
        norm = std::max(norm, std::abs(full));
        values[k] = scale * full;
    }
    if (worst > 1e-8 * std::max(norm, 1e-300) && worst > 1e-300) {
        std::ostringstream os;
        os << "restriction_operator_d2: angular grid under-resolved (relative change " << worst / norm << ")";
        throw AccuracyError(os.str(), worst / norm);
    }
    return SphereFunction(out, std::move(values));
}

ResolventParams::ResolventParams(double t, double e) : tau(t), eps(e) {
    if (!(e > 0.0)) throw InvalidArgument("ResolventParams: ε must be positive");
    if (!(t > 0.0)) throw InvalidArgument("ResolventParams: τ must be positive");
}

double resolvent_real_part(double lambda, const ResolventParams& rp) {
    const double a = lambda * lambda - rp.tau;
    return a / (a * a + rp.eps * rp.eps);
}

double resolvent_imag_part(double lambda, const ResolventParams& rp) {
    const double a = lambda * lambda - rp.tau;
    return rp.eps / (a * a + rp.eps * rp.eps);
}

MultiplierSymbol resolvent_symbol(const ResolventParams& rp) {
    MultiplierSymbol m;
    m.eval = [rp](double lambda) { return complex(resolvent_real_part(lambda, rp), resolvent_imag_part(lambda, rp)); };
    m.even = true;
    m.frequency = std::sqrt(rp.tau);
    std::ostringstream os;
    os << "resolvent[tau=" << rp.tau << ",eps=" << rp.eps << "]";
    m.label = os.str();
    return m;
}

MultiplierSymbol dresolvent_symbol(const ResolventParams& rp) {
    MultiplierSymbol m;
    m.eval = [rp](double lambda) {
        return lambda * complex(resolvent_real_part(lambda, rp), resolvent_imag_part(lambda, rp));
    };
    // λ/(λ²−z) is odd in λ; kernel synthesis needs even symbols.
    m.even = false;
    m.frequency = std::sqrt(rp.tau);
    std::ostringstream os;
    os << "dresolvent[tau=" << rp.tau << ",eps=" << rp.eps << "]";
    m.label = os.str();
    return m;
}

SmoothingExponent::SmoothingExponent(double p_, int d_) : d(d_), p(p_), gamma_p(0.0) {
    if (d < 2) throw InvalidArgument("SmoothingExponent: d must be at least 2");
    if (!(p > 2.0)) throw DomainError("SmoothingExponent: p must exceed 2");
    const double pst = p_st(d);
    auto upper = [this](double q) { return 1.0 - d * (0.5 - 1.0 / q); };
    auto lower = [this](double q) { return 0.5 - 0.5 * (d - 1) * (0.5 - 1.0 / q); };
    if (std::abs(upper(pst) - lower(pst)) > 1e-12) throw ConsistencyError("SmoothingExponent: branches disagree at p_ST");
    gamma_p = p > pst ? upper(p) : lower(p);
}

double smoothing_time_weight(double lambda) { return kPi / lambda; }

double time_l2_bruteforce(const SpectralGrid& lg, std::span<const complex> a, double T, int nt) {
    if (a.size() != lg.size() || nt < 2) throw InvalidArgument("time_l2_bruteforce: bad sizes");
    const double dt = 2.0 * T / (nt - 1);
    double acc = 0.0;
    for (int k = 0; k < nt; ++k) {
        const double t = -T + k * dt;
        complex v = 0.0;
        for (std::size_t j = 0; j < lg.size(); ++j) {
            const double l = lg.nodes[j];
            v += lg.weights[j] * a[j] * complex(std::cos(t * l * l), std::sin(t * l * l));
        }
        acc += (k == 0 || k == nt - 1 ? 0.5 : 1.0) * std::norm(v);
    }
    return acc * dt;
}

namespace {

// Reference amplitude: Gaussian bump at λ = 2 with width 0.3, supported well inside (0, 4).
// The λ grid must resolve e^{itλ²} up to |t| = T.
void check_time_weight() {
    static const bool ok = [] {
        const auto lg = make_spectral_grid(4.0, 64, 16);
        std::vector<complex> a(lg.size());
        double closed = 0.0;
        for (std::size_t j = 0; j < lg.size(); ++j) {
            const double l = lg.nodes[j];
            a[j] = std::exp(-std::pow((l - 2.0) / 0.3, 2)) * complex(1.0, 0.5 * l);
            closed += lg.weights[j] * std::norm(a[j]) * smoothing_time_weight(l);
        }
        const double brute = time_l2_bruteforce(lg, a, 10.0, 2001);
        if (std::abs(brute - closed) > 1e-4 * closed) {
            std::ostringstream os;
            os << "smoothing_functional: time weight disagrees with brute force (" << closed << " vs " << brute << ")";
            throw ConsistencyError(os.str());
        }
        return true;
    }();
    (void)ok;
}

}  // namespace

double smoothing_functional(const SpectralFunction& ft, const SmoothingExponent& se, const RadialGrid& rg) {
    const auto& mp = ft.params;
    if (mp.d != se.d) throw InvalidArgument("smoothing_functional: dimension mismatch");
    if (mp.d != 2 && mp.d != 3) throw InvalidArgument("smoothing_functional: d must be 2 or 3");
    check_time_weight();
    const auto& lg = ft.grid;
    const double kappa = inversion_constant(mp);
    // a_x(λ) = λ^γ κ f̃(λ) Φ_λ(x) |c(λ)|^{−2}; only |a_x|² enters.
    std::vector<double> base(lg.size());
    for (std::size_t j = 0; j < lg.size(); ++j) {
        const double l = lg.nodes[j];
        const double amp = std::pow(l, se.gamma_p) * kappa * std::abs(ft.values[j]) * plancherel_density(l, mp);
        base[j] = lg.weights[j] * amp * amp * smoothing_time_weight(l);
    }
    SphericalTable table(mp, lg.nodes, rg.nodes);
    double acc = 0.0;
    for (std::size_t i = 0; i < rg.size(); ++i) {
        double t2 = 0.0;
        for (std::size_t j = 0; j < lg.size(); ++j) t2 += base[j] * table(i, j) * table(i, j);
        acc += rg.weights[i] * std::exp(2.0 * mp.rho * log_sinh(rg.nodes[i])) * std::pow(t2, 0.5 * se.p);
    }
    return std::pow(mp.omega_sphere * acc, 1.0 / se.p);
}

double smoothing_functional(const RadialFunction& f, const SmoothingExponent& se, const SpectralGrid& lg) {
    return smoothing_functional(forward_radial_ft(f, lg), se, f.grid);
}

}  // namespace hyperbolic

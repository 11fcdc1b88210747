#pragma once

#include <functional>
#include <span>
#include <vector>

#include "hyperbolic/grids.hpp"
#include "hyperbolic/transform.hpp"

namespace hyperbolic {

/// Inverse transform of m·f̃, computed on the spectral grid `lg`.
RadialFunction apply_multiplier(const MultiplierSymbol& m, const RadialFunction& f, const SpectralGrid& lg);

/// f̃(λ) at a single frequency.
complex radial_transform_at(double lambda, const RadialFunction& f);

/// P_λ f(r) = |c(λ)|^{−2} f̃(λ) Φ_λ(r) on f's grid.
RadialFunction spectral_projector_radial(double lambda, const RadialFunction& f);

/// E_λ g(x) = |c(λ)|^{−1} ω_{d−1}^{−1} ∫ g(ω) conj(h_{λ,ω}(x)) dω, d ∈ {2,3}.
/// Throws AccuracyError when the phase of h changes by more than 2π/12
/// between neighbouring grid nodes carrying g ≠ 0.
std::vector<complex> extension_operator(double lambda, const SphereFunction& g, std::span<const AmbientPoint> points);

/// Same at points given in Iwasawa coordinates (no cancellation for |s| large).
std::vector<complex> extension_operator(double lambda, const SphereFunction& g, std::span<const IwasawaPoint> points);

/// f̃(λ, ω) = ∫ f(x) h_{λ,ω}(x) dx on H², ω = (cos θ, sin θ).
complex helgason_transform_d2(double lambda, double theta, const PolarFunction& f);

/// R_λ f(ω) = |c(λ)|^{−1} f̃(λ, ω) at the nodes of a d = 2 sphere grid.
/// Throws AccuracyError when halving the angular resolution changes the
/// result by more than 1e-8 relative.
SphereFunction restriction_operator_d2(double lambda, const PolarFunction& f, const SphereGrid& out);

struct ResolventParams {
    double tau;
    double eps;

    ResolventParams(double tau, double eps);
    complex z() const { return {tau, eps}; }
};

/// R_τ(λ) = (λ²−τ)/((λ²−τ)²+ε²).
double resolvent_real_part(double lambda, const ResolventParams& rp);
/// I_τ(λ) = ε/((λ²−τ)²+ε²).
double resolvent_imag_part(double lambda, const ResolventParams& rp);

/// λ ↦ 1/(λ²−z) = R_τ + i I_τ.
MultiplierSymbol resolvent_symbol(const ResolventParams& rp);
/// λ ↦ λ/(λ²−z).
MultiplierSymbol dresolvent_symbol(const ResolventParams& rp);

struct SmoothingExponent {
    int d;
    double p;
    double gamma_p;

    /// Two-branch γ_p; both branches are compared at p_ST on construction.
    SmoothingExponent(double p, int d);
    static double p_st(int d) { return 2.0 * (d + 1) / (d - 1.0); }
};

/// ∫_R |∫₀^∞ e^{itλ²} a(λ) dλ|² dt = π ∫₀^∞ |a(λ)|²/λ dλ.
double smoothing_time_weight(double lambda);

/// Brute-force ∫_{−T}^{T} |Σ_j w_j a_j e^{itλ_j²}|² dt with nt trapezoid points.
double time_l2_bruteforce(const SpectralGrid& lg, std::span<const complex> a, double T, int nt);

/// ‖D^{γ_p} e^{itΔ} f‖_{L^p_x L²_t} for radial f given by f̃ on `ft`, evaluated
/// on the radial grid `rg`. The time weight is checked once against
/// time_l2_bruteforce on a reference amplitude (ConsistencyError above 1e-4).
double smoothing_functional(const SpectralFunction& ft, const SmoothingExponent& se, const RadialGrid& rg);
double smoothing_functional(const RadialFunction& f, const SmoothingExponent& se, const SpectralGrid& lg);

}  // namespace hyperbolic

#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hyperbolic/grids.hpp"
#include "hyperbolic/jet.hpp"

namespace hyperbolic {

/// f̃(λ) = ω_{d−1} ∫₀^∞ f(r) Φ_λ(r) sh^{2ρ} r dr on the nodes of `lg`.
/// Throws TruncationError when the last radial panel carries more than
/// `tail_tolerance` of ∫|f| sh^{2ρ}.
SpectralFunction forward_radial_ft(const RadialFunction& f, const SpectralGrid& lg, double tail_tolerance = 1e-10);

/// f(r) = κ_d ∫₀^∞ f̃(λ) Φ_λ(r) |c(λ)|^{-2} dλ. Throws TruncationError when
/// the top octave [λ_max/2, λ_max] carries more than `tail_tolerance` of the mass.
RadialFunction inverse_radial_ft(const SpectralFunction& ft, const RadialGrid& rg, double tail_tolerance = 1e-8);

struct ConvolutionOptions {
    int theta_levels = 10;  // geometric θ panels down to π·2^{−levels}
    int order = 16;
};

/// (f*K)(r) = ∫ f(x′) K(d(x, x′)) dx′ at the nodes of f's grid, K given as a
/// function of distance.
RadialFunction radial_convolution(const RadialFunction& f, const std::function<complex(double)>& K,
                                  const ConvolutionOptions& opt = {});
/// Same with K sampled radially (interpolated, zero beyond its r_max).
RadialFunction radial_convolution(const RadialFunction& f, const RadialFunction& K, const ConvolutionOptions& opt = {});

/// Even radial multiplier m(λ). `hat` optionally gives the unitary Euclidean
/// transform m̂(r) = (2π)^{−1/2}∫ m(λ)e^{−iλr}dλ (real for real even m) in jet
/// arithmetic; without it m̂ is computed by quadrature over `band`.
struct MultiplierSymbol {
    std::function<complex(double)> eval;
    bool even = true;
    std::optional<std::pair<double, double>> band;  // m vanishes for |λ| outside
    std::string label;
    std::function<KernelJet(const KernelJet&)> hat;
    std::optional<double> hat_support;  // m̂(r) = 0 for r > hat_support
    double frequency = 0.0;             // oscillation scale of m̂ (largest |λ| in play)

    complex operator()(double lambda) const { return eval(lambda); }
};

/// Global constants between the kernel formulas (with the unitary m̂) and
/// inverse_radial_ft. Measured once; pinned by tests.
inline constexpr double kOddKernelCalibration = 1.0;
inline constexpr double kEvenKernelCalibration = 1.0;

struct KernelOptions {
    double s_max = 0.0;  // upper limit of the even-d integral when m̂ has no known support; 0 = 2·r_max
};

/// Convolution kernel of m(D) on the nodes of rg (d ∈ {2,…,6}).
/// Odd d: K = (2π)^{−1/2}(−(2π)^{−1} sh^{−1}r ∂_r)^ρ m̂.
/// Even d: K = π^{−1/2}∫_r^∞ (−(2π)^{−1} sh^{−1}s ∂_s)^{d/2} m̂ · sh s (ch s − ch r)^{−1/2} ds.
RadialFunction multiplier_kernel(const MultiplierSymbol& m, const RadialGrid& rg, const ModelParams& mp,
                                 const KernelOptions& opt = {});

/// Kernel at a single radius.
complex multiplier_kernel_at(const MultiplierSymbol& m, double r, const ModelParams& mp, const KernelOptions& opt = {});

/// Smooth even bump: 1 on [−1,1], 0 outside [−2,2].
double bump_beta(double xi);
KernelJet bump_beta(const KernelJet& xi);

/// χ with χ̂ = β/√(2π): χ(x) = π^{−1}∫₀² β(ξ) cos(ξx) dξ, ∫χ = 1.
double dyadic_chi(double x);
/// ψ = 2χ(2·) − χ; ψ̂(ξ) = (β(ξ/2) − β(ξ))/√(2π) vanishes outside 1 ≤ |ξ| ≤ 4.
double dyadic_psi(double x);
double dyadic_psi_hat(double xi);
double dyadic_chi_hat(double xi);

enum class DyadicKind { J, K };

struct DyadicPiece {
    double Lambda;
    int k;
    DyadicKind kind;
};

/// k₀ = round(−log₂ Λ), so 2^{k₀} ~ 1/Λ.
int dyadic_k0(double Lambda);

/// Symbols: J = 2^{k₀}χ(2^{k₀}(λ−Λ)) + (λ → −λ); K_k = 2^kψ(2^k(λ−Λ)) + (λ → −λ).
MultiplierSymbol dyadic_symbol(const DyadicPiece& piece);

/// J_{Λ,k₀} followed by K_{Λ,k} for k = max(k_lo, k₀), …, k_hi.
std::vector<std::pair<DyadicPiece, RadialFunction>> dyadic_projector_kernels(double Lambda, int k_lo, int k_hi,
                                                                             const RadialGrid& rg,
                                                                             const ModelParams& mp);

}  // namespace hyperbolic

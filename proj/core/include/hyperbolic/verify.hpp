#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hyperbolic/norms.hpp"
#include "hyperbolic/operators.hpp"

namespace hyperbolic {

enum class PredictionContext {
    ProjectorDuality,
    ProjectorOffDuality,
    Resolvent,
    DResolvent,
    SmallFreq,
    KnappLower,
    RadialLower,
    ExtensionLower,
};

std::string to_string(PredictionContext c);

struct ExponentPrediction {
    PredictionContext context;
    int d;
    double p = 0.0;  // duality exponent, or 0
    double s = 0.0;  // source exponent off duality, or 0
    double q = 0.0;  // target exponent off duality, or 0
    double exponent;
    double p_st;
    std::optional<std::string> constant_blowup;
};

/// 2(d+1)/(d−1).
double p_stein_tomas(int d);

/// λ^{d−1−2d/p} for p ≥ p_ST, λ^{(d−1)(1/2−1/p)} for 2 < p ≤ p_ST.
double predicted_alpha(double p, int d);
ExponentPrediction predict_projector(double p, int d);

/// Exponent of λ in the product of the two brackets of the L^s → L^q bound,
/// each bracket contributing its larger power. s ∈ [1,2), q ∈ (2,∞].
ExponentPrediction predicted_offduality_projector(double s, double q, int d);

enum class Region { I, II, III, IV, Outside };
enum class Diagram { Resolvent, DResolvent, ProjectorRemark };

std::string to_string(Region r);

struct RegionPoint {
    double inv_s;
    double inv_q;
    Region region = Region::Outside;
    Diagram diagram = Diagram::Resolvent;
    double exponent = 0.0;  // of τ (resolvents) or Λ (projector); NaN outside
    bool on_boundary = false;
};

/// Region and exponent of (1/s, 1/q). The lower half 1/s + 1/q < 1 is the
/// mirror of the upper half under (x, y) ↦ (1−y, 1−x); on the duality line
/// the duality-line estimates apply. Boundary points take the
/// smallest exponent among adjacent regions.
RegionPoint classify_region(double inv_s, double inv_q, int d, Diagram diagram = Diagram::Resolvent);

/// Exponent of region `r` at (1/s, 1/q) in the upper-half formulas.
double region_exponent(Region r, double inv_s, double inv_q, int d, Diagram diagram);

// ---- experiments ----

struct ExperimentOptions {
    double r_max = 24.0;  // radial range for Φ_λ norms
    int s_nodes = 48;     // Knapp region quadrature
    int v_nodes = 16;
    int cap_nodes = 32;
};

enum class ProjectorFamily { Radial, Knapp };

struct ScalingResult {
    std::string family;
    ScalingFit fit;
    double predicted;  // exponent the family itself should exhibit
    double alpha;      // predicted_alpha (or the relevant sharp exponent)
};

/// L^p norm of Φ_λ with divergence detection, on a grid resolving 12 nodes per period.
NormResult spherical_lp_norm(double lambda, double p, const ModelParams& mp, double r_max = 24.0);

/// Exponent of λ in ‖Φ_λ‖_p: −ρ for 2 < p ≤ 2d/(d−1), −d/p beyond.
double spherical_norm_exponent(double p, int d);

/// Radial family: |c(λ)|^{−2}|f̃(λ)|‖Φ_λ‖_p/‖f‖_{p′} with f = exp(−(λr)²).
double radial_projector_ratio(double lambda, double p, const ModelParams& mp, const ExperimentOptions& opt = {});

/// Knapp cap φ_δ = 1{|ω − e₁| < δ} on a cap grid.
SphereFunction knapp_cap(double delta, int d, int nodes);

/// Region {s ∈ [s_min, −½log(λδ²)], |v| ≤ 0.01/(λδ)}; s_min is chosen so that
/// the omitted part of ∫ e^{ρ(p−2)s} is below 1e-6.
IwasawaRegion knapp_region(double lambda, double delta, double p, const ModelParams& mp);

/// ‖E_λφ_δ‖_{L^p(region)}/‖φ_δ‖_{L²} with δ = λ^{−1/2}.
double knapp_extension_ratio(double lambda, double p, const ModelParams& mp, const ExperimentOptions& opt = {});

/// min over the Knapp region samples of |E_λφ_δ|/(λ^ρ δ^{d−1} e^{ρs}).
double knapp_pointwise_constant(double lambda, const ModelParams& mp, const ExperimentOptions& opt = {});

ScalingResult run_projector_scaling(ProjectorFamily family, double p, int d, const std::vector<double>& lambdas,
                                    const ExperimentOptions& opt = {});

/// Radial-family ratio for fixed f = exp(−r²) over small Λ.
ScalingResult run_smallfreq_check(int d, const std::vector<double>& Lambdas, double p, const ExperimentOptions& opt = {});

struct ExtensionLowerBounds {
    ScalingResult constant_family;  // predicted ρ − d/q (0 for q ≤ 2d/(d−1))
    ScalingResult cap_family;       // predicted ρ/p − ρ/q
    bool divergent = false;         // q ≤ 2: Φ_λ ∉ L^q
};

ExtensionLowerBounds run_extension_lower_bounds(double p, double q, int d, const std::vector<double>& lambdas,
                                                const ExperimentOptions& opt = {});

/// max over ω on a circle grid of |(f∘U)~(λ,ω) − [U⁻¹𝟎,b(ω)]^{iλ−ρ} f̃(λ)| / |f̃(λ)| for
/// f = exp(−r²) on H².
double boost_covariance_error(double t, double lambda, int n_omega = 16);

/// ‖[U⁻¹𝟎,b(ω)]^{−ρ} g∘U‖_{L^p(S¹)} with g ≡ 1.
double boost_denominator(double t, double p, int n = 8192);

/// Relative errors of the transform identities for f = exp(−(r/w)²).
struct TransformIdentityErrors {
    double plancherel = 0.0;
    double round_trip = 0.0;
    double convolution = 0.0;
};

TransformIdentityErrors transform_identity_errors(int d, double width = 1.0);

/// max |multiplier_kernel − inverse transform| / max |inverse transform| for m = exp(−λ²).
double kernel_calibration_error(int d);

/// |⟨R_λf, g⟩ − ⟨f, E_λg⟩| / |⟨f, E_λg⟩| on H² for a non-radial f and a smooth g.
double adjointness_error_d2(double lambda);

/// Smoothing functional over ‖f‖_{L²} for the spectral bump f̃ = exp(−(λ−λ₀)²).
double smoothing_bump_ratio(double lambda0, double p, int d, double r_max = 16.0);

/// Measured constants in the dyadic kernel bounds for one Λ, with c = 1/2, C = 4:
///   |J| ≤ C_J Λ^{d−1},
///   |K_k| ≤ C_K (Λ/sh(c2^k))^ρ on c2^k ≤ r ≤ C2^k,
///   |K_k| ≤ C_tail (Λ/sh(c2^k))^ρ (2^{−k}Λ^{−1})^{10} for r < c2^k,
/// over k = k₀, …, k₀ + k_span.
struct DyadicBoundFit {
    double Lambda = 0.0;
    int d = 0;
    double c_J = 0.0;
    double c_K = 0.0;
    double c_tail = 0.0;
    double outside = 0.0;  // max |K_k| for r > C2^k
};

DyadicBoundFit fit_dyadic_kernel_bounds(double Lambda, int d, int k_span = 3, int samples = 48);

}  // namespace hyperbolic

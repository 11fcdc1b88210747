#pragma once

#include <functional>
#include <limits>
#include <span>
#include <utility>
#include <vector>

#include "hyperbolic/grids.hpp"

namespace hyperbolic {

struct NormResult {
    double value = 0.0;  // +∞ when divergent
    bool divergent = false;
    double tail_exponent = 0.0;  // fitted d/dr log of the windowed tail integrand

    bool finite() const noexcept { return !divergent; }
};

/// (ω_{d−1}∫₀^{r_max} |f|^p sh^{2ρ} dr)^{1/p}, p ∈ [1, ∞]. The integrand of the
/// outer half is summed over 8 windows; if their logs do not decay the norm
/// is reported as divergent, otherwise the tail beyond r_max is extrapolated.
NormResult lp_norm_polar(const RadialFunction& f, double p);

/// Same for a non-radial function on H² sampled in polar form.
NormResult lp_norm_polar(const PolarFunction& f, double p);

struct IwasawaRegion {
    double s_lo, s_hi;
    double v_lo, v_hi;  // box [v_lo, v_hi]^{d−1}, or |v| ≤ v_hi when ball
    bool ball = false;
};

/// (∫_region |F|^p e^{−(d−1)s} dv ds)^{1/p} by tensor Gauss–Legendre.
double lp_norm_iwasawa(const std::function<complex(const IwasawaPoint&)>& F, double p, const IwasawaRegion& region,
                       const ModelParams& mp, int s_nodes = 64, int v_nodes = 32);

/// Quadrature points of the Iwasawa region with their weights (volume element included).
struct IwasawaSample {
    std::vector<IwasawaPoint> points;
    std::vector<double> weights;
};
IwasawaSample iwasawa_quadrature(const IwasawaRegion& region, const ModelParams& mp, int s_nodes, int v_nodes);

double sphere_lp_norm(const SphereFunction& g, double p);

struct ScalingFit {
    double slope = 0.0;
    double intercept = 0.0;
    double max_residual = 0.0;
    std::vector<std::pair<double, double>> points;
};

/// Least squares line through (log λ, log value).
ScalingFit fit_scaling_exponent(std::span<const std::pair<double, double>> points);

}  // namespace hyperbolic

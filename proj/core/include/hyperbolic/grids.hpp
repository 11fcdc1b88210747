#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "hyperbolic/geometry.hpp"

namespace hyperbolic {

/// Composite Gauss–Legendre nodes on (0, r_max).
struct RadialGrid {
    std::vector<double> nodes;
    std::vector<double> weights;
    std::vector<double> edges;  // panel boundaries, edges.front() = 0
    int order = 16;
    double r_max = 0.0;

    std::size_t size() const noexcept { return nodes.size(); }
};

RadialGrid make_radial_grid(double r_max = 16.0, int panels = 256, int order = 16);

struct RadialFunction {
    RadialGrid grid;
    std::vector<complex> values;
    ModelParams params;

    RadialFunction(RadialGrid g, std::vector<complex> v, ModelParams mp);
    static RadialFunction sample(const RadialGrid& g, const ModelParams& mp, const std::function<complex(double)>& f);

    std::size_t size() const noexcept { return values.size(); }
    /// Panel-local Lagrange interpolation; 0 beyond r_max.
    complex at(double r) const;
};

/// Composite Gauss–Legendre nodes on (0, λ_max).
struct SpectralGrid {
    std::vector<double> nodes;
    std::vector<double> weights;
    double lambda_max = 0.0;

    std::size_t size() const noexcept { return nodes.size(); }
};

SpectralGrid make_spectral_grid(double lambda_max = 128.0, int panels = 256, int order = 16);

/// Nodes on (lo, hi) only, for spectra known to vanish outside a band.
SpectralGrid make_band_grid(double lo, double hi, int panels = 16, int order = 16);

/// Default spectral grid for a frequency scale Λ: λ_max = max(4Λ, 128).
SpectralGrid default_spectral_grid(double Lambda);

struct SpectralFunction {
    SpectralGrid grid;
    std::vector<complex> values;
    ModelParams params;

    SpectralFunction(SpectralGrid g, std::vector<complex> v, ModelParams mp);
    static SpectralFunction sample(const SpectralGrid& g, const ModelParams& mp, const std::function<complex(double)>& f);
    std::size_t size() const noexcept { return values.size(); }
};

/// Quadrature on S^{d−1} (d = 2, 3) or on a cap around e₁.
struct SphereGrid {
    int d = 2;
    std::vector<double> nodes;    // row-major, size() × d
    std::vector<double> weights;  // sum to the covered area
    std::vector<double> polar;    // θ₁ = angle to e₁ (signed in d = 2)
    std::vector<std::pair<std::size_t, std::size_t>> neighbours;

    std::size_t size() const noexcept { return weights.size(); }
    std::span<const double> node(std::size_t i) const { return {nodes.data() + i * d, static_cast<std::size_t>(d)}; }
};

/// Full sphere: d = 2 trapezoid with n points; d = 3 n-point Gauss–Legendre in
/// cos θ₁ times a 2n-point azimuthal trapezoid.
SphereGrid make_sphere_grid(int d, int n);

/// Cap {θ₁ < theta_max}: Gauss–Legendre in θ₁ (n points per side in d = 2,
/// n in d = 3 with a 2m-point azimuthal trapezoid, m = n).
SphereGrid make_cap_grid(int d, double theta_max, int n);

struct SphereFunction {
    SphereGrid grid;
    std::vector<complex> values;

    SphereFunction(SphereGrid g, std::vector<complex> v);
    static SphereFunction sample(const SphereGrid& g, const std::function<complex(std::span<const double>)>& f);
};

/// A function on H² sampled on a (radial nodes) × (uniform θ) grid.
struct PolarFunction {
    RadialGrid radial;
    int n_theta = 0;
    std::vector<complex> values;  // values[i * n_theta + j] at (r_i, θ_j = 2πj/n_theta)

    PolarFunction(RadialGrid g, int n_theta, std::vector<complex> v);
    static PolarFunction sample(const RadialGrid& g, int n_theta, const std::function<complex(double, double)>& f);
    double theta(int j) const;
};

}  // namespace hyperbolic

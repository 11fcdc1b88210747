#pragma once

#include <span>
#include <vector>

#include "hyperbolic/geometry.hpp"

namespace hyperbolic {

/// Principal branch of log Γ(z). Lanczos (g = 607/128, 15 terms) with
/// reflection for Re z < 1/2. Poles throw DomainError.
complex log_gamma_complex(complex z);

struct CFunctionEval {
    double lambda;
    complex c_value;
    double density;  // |c(λ)|^{-2}
};

/// c(λ) = 2^{2ρ−1}Γ(ρ+½)/√π · Γ(iλ)/Γ(ρ+iλ).
CFunctionEval harish_chandra_c(double lambda, const ModelParams& mp);

/// |c(λ)|^{-2}; extended to λ = 0 by its limit 0.
double plancherel_density(double lambda, const ModelParams& mp);

/// Constant κ_d in f(r) = κ_d ∫₀^∞ f̃(λ)Φ_λ(r)|c(λ)|^{-2} dλ when
/// f̃(λ) = ω_{d−1}∫ f Φ_λ sh^{2ρ} dr. Equals 2^{d−1}/(2π ω_{d−1}).
double inversion_constant(const ModelParams& mp);

enum class SphericalMethod { ExactQuadrature, ClosedFormD3, Asymptotic };

struct SphericalEval {
    double lambda;
    double r;
    complex value;
    SphericalMethod method;
};

struct SphericalOptions {
    bool closed_form_d3 = false;  // use sin(λr)/(λ sh r) when d = 3
    double tolerance = 1e-11;     // agreement between successive refinements
    std::size_t max_nodes = std::size_t{1} << 20;
};

/// Φ_λ(r) from its integral representation. The endpoint s = r is removed
/// by s = r − u², so the d = 2 singularity never reaches the quadrature.
SphericalEval spherical_fn(double lambda, double r, const ModelParams& mp, const SphericalOptions& opt = {});

/// Leading large-λ term, with the prefactor fixed by c(λ):
/// 2^ρ Γ(ρ+½)/√π · cos(λr − ρπ/2) / (λ sh r)^ρ.
double spherical_asymptotic(double lambda, double r, const ModelParams& mp);

/// Φ_λ(r) on a product grid, values[i * lambdas.size() + j] = Φ_{λ_j}(r_i).
/// Uses the Harish-Chandra series where it converges fast and a shared
/// quadrature elsewhere; agrees with spherical_fn to about 1e-11.
class SphericalTable {
public:
    SphericalTable(const ModelParams& mp, std::span<const double> lambdas, std::span<const double> radii);

    double operator()(std::size_t ir, std::size_t jl) const { return values_[ir * nl_ + jl]; }
    std::size_t radii() const noexcept { return nr_; }
    std::size_t lambdas() const noexcept { return nl_; }
    const std::vector<double>& data() const noexcept { return values_; }

private:
    std::size_t nr_, nl_;
    std::vector<double> values_;
};

/// Series value of Φ_λ(r) (r ≥ 1.5 and λ ≥ 1 recommended).
double spherical_series(double lambda, double r, const ModelParams& mp);

/// ln sh x for x > 0 without overflow.
double log_sinh(double x);

}  // namespace hyperbolic

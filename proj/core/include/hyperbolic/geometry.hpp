#pragma once

#include <complex>
#include <span>
#include <vector>

namespace hyperbolic {

using complex = std::complex<double>;

/// Dimension d of H^d with its derived constants.
struct ModelParams {
    int d;
    double rho;           // (d-1)/2
    double omega_sphere;  // area of S^{d-1}

    explicit ModelParams(int dimension);

    /// Area of S^{n-1} for n ≥ 1 (ω_0 = 2 counts the two points of S^0).
    static double sphere_area(int n);
};

/// A point of the hyperboloid {[x,x] = 1, x⁰ > 0} in R^{d+1}.
class AmbientPoint {
public:
    /// Validates and renormalizes. Throws ConsistencyError when the drift
    /// |[x,x] − 1| exceeds 1e-10 relative to (x⁰)², or x⁰ ≤ 0.
    explicit AmbientPoint(std::vector<double> coords);

    static AmbientPoint origin(int d);

    const std::vector<double>& coords() const noexcept { return coords_; }
    double operator[](std::size_t i) const { return coords_[i]; }
    int dimension() const noexcept { return static_cast<int>(coords_.size()) - 1; }

private:
    std::vector<double> coords_;
};

struct PolarPoint {
    double r;                   // geodesic distance to the origin
    std::vector<double> omega;  // unit vector in R^d
};

struct IwasawaPoint {
    double s;
    std::vector<double> v;  // length d-1
};

/// Boost in the (x⁰, x¹) plane:
///   [ ch t  sh t  0 ]
///   [ sh t  ch t  0 ]
///   [  0     0    I ]
class LorentzBoost {
public:
    LorentzBoost(double t, int d);

    double parameter() const noexcept { return t_; }
    int dimension() const noexcept { return d_; }
    double entry(int row, int col) const;

    std::vector<double> apply(std::span<const double> x) const;
    AmbientPoint apply(const AmbientPoint& x) const;
    LorentzBoost inverse() const { return LorentzBoost(-t_, d_); }

private:
    double t_;
    int d_;
};

/// [x,y] = x⁰y⁰ − x¹y¹ − … − x^d y^d.
double minkowski_form(std::span<const double> x, std::span<const double> y);

/// b(ω) = (1, ω) on the light cone.
std::vector<double> boundary_point(std::span<const double> omega);

/// arccosh([x,y]); values of [x,y] within 1e-10 below 1 are clamped.
double geodesic_distance(const AmbientPoint& x, const AmbientPoint& y);

AmbientPoint polar_to_ambient(const PolarPoint& p, const ModelParams& mp);
PolarPoint ambient_to_polar(const AmbientPoint& x);
AmbientPoint iwasawa_to_ambient(const IwasawaPoint& p, const ModelParams& mp);

/// log [x, b(ω)] for x given in Iwasawa coordinates, evaluated without the
/// cancellation that the ambient coordinates suffer when |s| is large.
double log_bracket_iwasawa(const IwasawaPoint& p, std::span<const double> omega);

/// h_{λ,ω}(x) = [x,b(ω)]^{iλ−ρ}, computed as exp((iλ−ρ)·ln[x,b(ω)]).
complex plane_wave(double lambda, std::span<const double> omega, const AmbientPoint& x, const ModelParams& mp);

/// Plane wave from a precomputed ln[x,b(ω)].
inline complex plane_wave_from_log(double lambda, double log_bracket, double rho) {
    return std::exp(complex(-rho, lambda) * log_bracket);
}

/// ⟨x, ω⟩ = −ln [x, b(ω)].
double horocyclic_coordinate(const AmbientPoint& x, std::span<const double> omega);

struct BoostedDirection {
    std::vector<double> omega;  // ω' with b(ω') = U b(ω) / (U b(ω))₀
    double factor;              // [U⁻¹𝟎, b(ω)]
};

BoostedDirection boost_action(const LorentzBoost& U, std::span<const double> omega);

}  // namespace hyperbolic

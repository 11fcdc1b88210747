#include "hyperbolic/geometry.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <sstream>

#include "hyperbolic/error.hpp"

namespace hyperbolic {

ModelParams::ModelParams(int dimension)
    : d(dimension), rho(0.5 * (dimension - 1)), omega_sphere(0.0) {
    if (dimension < 2) throw InvalidArgument("ModelParams: dimension must be at least 2");
    omega_sphere = sphere_area(dimension);
}

double ModelParams::sphere_area(int n) {
    if (n < 1) throw InvalidArgument("sphere_area: n must be at least 1");
    return 2.0 * std::pow(std::numbers::pi, 0.5 * n) / std::tgamma(0.5 * n);
}

AmbientPoint::AmbientPoint(std::vector<double> coords) : coords_(std::move(coords)) {
    if (coords_.size() < 3) throw InvalidArgument("AmbientPoint: need d+1 ≥ 3 coordinates");
    if (!(coords_[0] > 0.0)) throw ConsistencyError("AmbientPoint: x⁰ must be positive");
    double spatial = 0.0;
    for (std::size_t i = 1; i < coords_.size(); ++i) spatial += coords_[i] * coords_[i];
    const double form = coords_[0] * coords_[0] - spatial;
    const double scale = std::max(1.0, coords_[0] * coords_[0]);
    if (std::abs(form - 1.0) > 1e-10 * scale) {
        std::ostringstream os;
        os << "AmbientPoint: [x,x] = " << form << " is not on the hyperboloid";
        throw ConsistencyError(os.str());
    }
    coords_[0] = std::sqrt(1.0 + spatial);
}

AmbientPoint AmbientPoint::origin(int d) {
    std::vector<double> x(d + 1, 0.0);
    x[0] = 1.0;
    return AmbientPoint(std::move(x));
}

LorentzBoost::LorentzBoost(double t, int d) : t_(t), d_(d) {
    if (d < 2) throw InvalidArgument("LorentzBoost: dimension must be at least 2");
}

double LorentzBoost::entry(int row, int col) const {
    if (row < 0 || col < 0 || row > d_ || col > d_) throw InvalidArgument("LorentzBoost::entry out of range");
    if (row <= 1 && col <= 1) return row == col ? std::cosh(t_) : std::sinh(t_);
    return row == col ? 1.0 : 0.0;
}

std::vector<double> LorentzBoost::apply(std::span<const double> x) const {
    if (static_cast<int>(x.size()) != d_ + 1) throw InvalidArgument("LorentzBoost::apply: dimension mismatch");
    std::vector<double> y(x.begin(), x.end());
    const double ch = std::cosh(t_);
    const double sh = std::sinh(t_);
    y[0] = ch * x[0] + sh * x[1];
    y[1] = sh * x[0] + ch * x[1];
    return y;
}

AmbientPoint LorentzBoost::apply(const AmbientPoint& x) const { return AmbientPoint(apply(std::span(x.coords()))); }

double minkowski_form(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size() || x.size() < 2) throw InvalidArgument("minkowski_form: dimension mismatch");
    double acc = x[0] * y[0];
    for (std::size_t i = 1; i < x.size(); ++i) acc -= x[i] * y[i];
    return acc;
}

std::vector<double> boundary_point(std::span<const double> omega) {
    std::vector<double> b(omega.size() + 1);
    b[0] = 1.0;
    std::copy(omega.begin(), omega.end(), b.begin() + 1);
    return b;
}

double geodesic_distance(const AmbientPoint& x, const AmbientPoint& y) {
    const double form = minkowski_form(x.coords(), y.coords());
    if (form < 1.0 - 1e-10) {
        std::ostringstream os;
        os << "geodesic_distance: [x,y] = " << form << " < 1";
        throw ConsistencyError(os.str());
    }
    return std::acosh(std::max(form, 1.0));
}

namespace {
void check_unit(std::span<const double> omega, std::size_t d, const char* who) {
    if (omega.size() != d) throw InvalidArgument(std::string(who) + ": direction has wrong dimension");
    const double n2 = std::inner_product(omega.begin(), omega.end(), omega.begin(), 0.0);
    if (std::abs(std::sqrt(n2) - 1.0) > 1e-12) throw InvalidArgument(std::string(who) + ": direction is not a unit vector");
}
}  // namespace

AmbientPoint polar_to_ambient(const PolarPoint& p, const ModelParams& mp) {
    if (p.r < 0.0) throw InvalidArgument("polar_to_ambient: r must be non-negative");
    check_unit(p.omega, mp.d, "polar_to_ambient");
    std::vector<double> x(mp.d + 1);
    x[0] = std::cosh(p.r);
    const double sh = std::sinh(p.r);
    for (int i = 0; i < mp.d; ++i) x[i + 1] = sh * p.omega[i];
    return AmbientPoint(std::move(x));
}

PolarPoint ambient_to_polar(const AmbientPoint& x) {
    const auto& c = x.coords();
    const int d = x.dimension();
    double n2 = 0.0;
    for (int i = 1; i <= d; ++i) n2 += c[i] * c[i];
    const double n = std::sqrt(n2);
    PolarPoint p{std::asinh(n), std::vector<double>(d, 0.0)};
    if (n == 0.0) {
        p.omega[0] = 1.0;
    } else {
        for (int i = 0; i < d; ++i) p.omega[i] = c[i + 1] / n;
    }
    return p;
}

AmbientPoint iwasawa_to_ambient(const IwasawaPoint& p, const ModelParams& mp) {
    if (static_cast<int>(p.v.size()) != mp.d - 1) throw InvalidArgument("iwasawa_to_ambient: v must have length d-1");
    const double v2 = std::inner_product(p.v.begin(), p.v.end(), p.v.begin(), 0.0);
    const double es = std::exp(-p.s);
    std::vector<double> x(mp.d + 1);
    x[0] = std::cosh(p.s) + 0.5 * es * v2;
    x[1] = std::sinh(p.s) + 0.5 * es * v2;
    for (int i = 0; i < mp.d - 1; ++i) x[i + 2] = es * p.v[i];
    return AmbientPoint(std::move(x));
}

double log_bracket_iwasawa(const IwasawaPoint& p, std::span<const double> omega) {
    if (omega.size() != p.v.size() + 1) throw InvalidArgument("log_bracket_iwasawa: dimension mismatch");
    const double c = omega[0];
    double tail2 = 0.0;
    double dot = 0.0;
    for (std::size_t i = 0; i < p.v.size(); ++i) {
        tail2 += omega[i + 1] * omega[i + 1];
        dot += omega[i + 1] * p.v[i];
    }
    // 1 − ω₁ without cancellation near the north pole.
    const double one_minus_c = c > 0.0 ? tail2 / (1.0 + c) : 1.0 - c;
    const double one_plus_c = 1.0 + c;
    const double v2 = std::inner_product(p.v.begin(), p.v.end(), p.v.begin(), 0.0);
    const double near = 0.5 * one_plus_c + 0.5 * v2 * one_minus_c - dot;
    // [x,b] = e^{s}(1−ω₁)/2 + e^{−s}·near
    if (p.s <= 0.0) return -p.s + std::log(near + std::exp(2.0 * p.s) * 0.5 * one_minus_c);
    return p.s + std::log(0.5 * one_minus_c + std::exp(-2.0 * p.s) * near);
}

complex plane_wave(double lambda, std::span<const double> omega, const AmbientPoint& x, const ModelParams& mp) {
    check_unit(omega, mp.d, "plane_wave");
    const auto b = boundary_point(omega);
    const double bracket = minkowski_form(x.coords(), b);
    return plane_wave_from_log(lambda, std::log(bracket), mp.rho);
}

double horocyclic_coordinate(const AmbientPoint& x, std::span<const double> omega) {
    const auto b = boundary_point(omega);
    return -std::log(minkowski_form(x.coords(), b));
}

BoostedDirection boost_action(const LorentzBoost& U, std::span<const double> omega) {
    check_unit(omega, U.dimension(), "boost_action");
    const auto ub = U.apply(boundary_point(omega));
    BoostedDirection out;
    out.omega.resize(omega.size());
    for (std::size_t i = 0; i < omega.size(); ++i) out.omega[i] = ub[i + 1] / ub[0];
    const auto back = U.inverse().apply(AmbientPoint::origin(U.dimension()));
    out.factor = minkowski_form(back.coords(), boundary_point(omega));
    return out;
}

}  // namespace hyperbolic

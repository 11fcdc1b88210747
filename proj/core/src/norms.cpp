#include "hyperbolic/norms.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>

#include "hyperbolic/error.hpp"
#include "hyperbolic/quadrature.hpp"
#include "hyperbolic/specfun.hpp"

namespace hyperbolic {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr int kTailWindows = 8;
constexpr double kDivergenceSlope = -0.01;

double sh_power(double r, double rho) { return std::exp(2.0 * rho * log_sinh(r)); }

// contributions[i] = weight_i · |f|^p · volume density at nodes[i].
NormResult finish_polar(std::span<const double> nodes, std::span<const double> contributions, double r_max, double p) {
    double total = 0.0;
    for (double c : contributions) total += c;
    std::array<double, kTailWindows> window{};
    const double start = 0.5 * r_max;
    const double width = (r_max - start) / kTailWindows;
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        if (nodes[i] < start) continue;
        const int k = std::min(kTailWindows - 1, static_cast<int>((nodes[i] - start) / width));
        window[k] += contributions[i];
    }
    std::vector<double> xs, ys;
    for (int k = 0; k < kTailWindows; ++k) {
        if (window[k] > 0.0) {
            xs.push_back(start + (k + 0.5) * width);
            ys.push_back(std::log(window[k] / width));
        }
    }
    NormResult out;
    if (xs.size() >= 3) {
        const double n = static_cast<double>(xs.size());
        double sx = 0, sy = 0, sxx = 0, sxy = 0;
        for (std::size_t i = 0; i < xs.size(); ++i) {
            sx += xs[i];
            sy += ys[i];
            sxx += xs[i] * xs[i];
            sxy += xs[i] * ys[i];
        }
        const double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
        const double icept = (sy - slope * sx) / n;
        out.tail_exponent = slope;
        if (slope > kDivergenceSlope) {
            out.divergent = true;
            out.value = std::numeric_limits<double>::infinity();
            return out;
        }
        total += std::exp(icept + slope * r_max) / -slope;
    }
    out.value = std::pow(total, 1.0 / p);
    return out;
}

}  // namespace

NormResult lp_norm_polar(const RadialFunction& f, double p) {
    if (!(p >= 1.0)) throw InvalidArgument("lp_norm_polar: p must be at least 1");
    if (std::isinf(p)) {
        double m = 0.0;
        for (const auto& v : f.values) m = std::max(m, std::abs(v));
        return {m, false, 0.0};
    }
    const auto& g = f.grid;
    std::vector<double> contrib(g.size());
    for (std::size_t i = 0; i < g.size(); ++i)
        contrib[i] = f.params.omega_sphere * g.weights[i] * sh_power(g.nodes[i], f.params.rho) * std::pow(std::abs(f.values[i]), p);
    return finish_polar(g.nodes, contrib, g.r_max, p);
}

NormResult lp_norm_polar(const PolarFunction& f, double p) {
    if (!(p >= 1.0)) throw InvalidArgument("lp_norm_polar: p must be at least 1");
    const int nt = f.n_theta;
    if (std::isinf(p)) {
        double m = 0.0;
        for (const auto& v : f.values) m = std::max(m, std::abs(v));
        return {m, false, 0.0};
    }
    const auto& g = f.radial;
    std::vector<double> contrib(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) {
        double ring = 0.0;
        for (int j = 0; j < nt; ++j) ring += std::pow(std::abs(f.values[i * nt + j]), p);
        contrib[i] = g.weights[i] * std::sinh(g.nodes[i]) * ring * 2.0 * kPi / nt;
    }
    return finish_polar(g.nodes, contrib, g.r_max, p);
}

IwasawaSample iwasawa_quadrature(const IwasawaRegion& region, const ModelParams& mp, int s_nodes, int v_nodes) {
    if (mp.d != 2 && mp.d != 3) throw InvalidArgument("iwasawa_quadrature: d must be 2 or 3");
    if (!(region.s_hi > region.s_lo)) throw InvalidArgument("iwasawa_quadrature: empty s range");
    const auto sq = composite_gauss_legendre(region.s_lo, region.s_hi, std::max(1, (s_nodes + 15) / 16), 16);
    const int vp = std::max(1, (v_nodes + 15) / 16);
    // Cross-section nodes (length d−1) with weights.
    std::vector<std::vector<double>> vs;
    std::vector<double> vw;
    if (region.ball) {
        if (!(region.v_hi > 0.0)) throw InvalidArgument("iwasawa_quadrature: empty ball");
        if (mp.d == 2) {
            const auto q = composite_gauss_legendre(-region.v_hi, region.v_hi, vp, 16);
            for (std::size_t i = 0; i < q.size(); ++i) {
                vs.push_back({q.nodes[i]});
                vw.push_back(q.weights[i]);
            }
        } else {
            const auto q = composite_gauss_legendre(0.0, region.v_hi, vp, 16);
            const int na = std::max(8, v_nodes);
            for (std::size_t i = 0; i < q.size(); ++i)
                for (int a = 0; a < na; ++a) {
                    const double ph = 2.0 * kPi * a / na;
                    vs.push_back({q.nodes[i] * std::cos(ph), q.nodes[i] * std::sin(ph)});
                    vw.push_back(q.weights[i] * q.nodes[i] * 2.0 * kPi / na);
                }
        }
    } else {
        if (!(region.v_hi > region.v_lo)) throw InvalidArgument("iwasawa_quadrature: empty v box");
        const auto q = composite_gauss_legendre(region.v_lo, region.v_hi, vp, 16);
        if (mp.d == 2) {
            for (std::size_t i = 0; i < q.size(); ++i) {
                vs.push_back({q.nodes[i]});
                vw.push_back(q.weights[i]);
            }
        } else {
            for (std::size_t i = 0; i < q.size(); ++i)
                for (std::size_t k = 0; k < q.size(); ++k) {
                    vs.push_back({q.nodes[i], q.nodes[k]});
                    vw.push_back(q.weights[i] * q.weights[k]);
                }
        }
    }
    IwasawaSample out;
    for (std::size_t a = 0; a < sq.size(); ++a) {
        const double vol = std::exp(-(mp.d - 1) * sq.nodes[a]);
        for (std::size_t b = 0; b < vs.size(); ++b) {
            out.points.push_back({sq.nodes[a], vs[b]});
            out.weights.push_back(sq.weights[a] * vw[b] * vol);
        }
    }
    return out;
}

double lp_norm_iwasawa(const std::function<complex(const IwasawaPoint&)>& F, double p, const IwasawaRegion& region,
                       const ModelParams& mp, int s_nodes, int v_nodes) {
    if (!(p >= 1.0) || std::isinf(p)) throw InvalidArgument("lp_norm_iwasawa: p must be finite and at least 1");
    const auto q = iwasawa_quadrature(region, mp, s_nodes, v_nodes);
    double acc = 0.0;
    for (std::size_t i = 0; i < q.points.size(); ++i) acc += q.weights[i] * std::pow(std::abs(F(q.points[i])), p);
    return std::pow(acc, 1.0 / p);
}

double sphere_lp_norm(const SphereFunction& g, double p) {
    if (!(p >= 1.0)) throw InvalidArgument("sphere_lp_norm: p must be at least 1");
    if (std::isinf(p)) {
        double m = 0.0;
        for (const auto& v : g.values) m = std::max(m, std::abs(v));
        return m;
    }
    double acc = 0.0;
    for (std::size_t i = 0; i < g.values.size(); ++i) acc += g.grid.weights[i] * std::pow(std::abs(g.values[i]), p);
    return std::pow(acc, 1.0 / p);
}

ScalingFit fit_scaling_exponent(std::span<const std::pair<double, double>> points) {
    if (points.size() < 3) throw InvalidArgument("fit_scaling_exponent: need at least 3 points");
    double lo = INFINITY, hi = 0.0;
    for (const auto& [l, v] : points) {
        if (!(l > 0.0)) throw DomainError("fit_scaling_exponent: λ must be positive");
        if (!(v > 0.0) || !std::isfinite(v)) throw DomainError("fit_scaling_exponent: values must be positive and finite");
        lo = std::min(lo, l);
        hi = std::max(hi, l);
    }
    if (hi < 4.0 * lo) throw InvalidArgument("fit_scaling_exponent: λ spread must be at least a factor 4");
    const double n = static_cast<double>(points.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (const auto& [l, v] : points) {
        const double x = std::log(l), y = std::log(v);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    ScalingFit fit;
    fit.slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
    fit.intercept = (sy - fit.slope * sx) / n;
    for (const auto& [l, v] : points)
        fit.max_residual = std::max(fit.max_residual, std::abs(std::log(v) - fit.intercept - fit.slope * std::log(l)));
    fit.points.assign(points.begin(), points.end());
    return fit;
}

}  // namespace hyperbolic

#include "hyperbolic/grids.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "hyperbolic/error.hpp"
#include "hyperbolic/quadrature.hpp"

namespace hyperbolic {

namespace {
constexpr double kPi = std::numbers::pi;

int round_up_nodes(int n) { return std::max(1, (n + 15) / 16); }
}  // namespace

RadialGrid make_radial_grid(double r_max, int panels, int order) {
    if (!(r_max > 0.0) || panels < 1 || order < 1) throw InvalidArgument("make_radial_grid: bad parameters");
    RadialGrid g;
    auto q = composite_gauss_legendre(0.0, r_max, panels, order);
    g.nodes = std::move(q.nodes);
    g.weights = std::move(q.weights);
    g.edges.resize(panels + 1);
    for (int p = 0; p <= panels; ++p) g.edges[p] = r_max * p / panels;
    g.order = order;
    g.r_max = r_max;
    return g;
}

RadialFunction::RadialFunction(RadialGrid g, std::vector<complex> v, ModelParams mp)
    : grid(std::move(g)), values(std::move(v)), params(mp) {
    if (values.size() != grid.size()) throw InvalidArgument("RadialFunction: value count does not match grid");
    for (const auto& z : values)
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) throw InvalidArgument("RadialFunction: non-finite value");
}

RadialFunction RadialFunction::sample(const RadialGrid& g, const ModelParams& mp, const std::function<complex(double)>& f) {
    std::vector<complex> v(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) v[i] = f(g.nodes[i]);
    return RadialFunction(g, std::move(v), mp);
}

complex RadialFunction::at(double r) const {
    if (r < 0.0 || r > grid.r_max) return 0.0;
    auto it = std::upper_bound(grid.edges.begin(), grid.edges.end(), r);
    std::size_t panel = it == grid.edges.begin() ? 0 : static_cast<std::size_t>(it - grid.edges.begin()) - 1;
    panel = std::min(panel, grid.edges.size() - 2);
    const std::size_t k = static_cast<std::size_t>(grid.order);
    const std::span<const double> x(grid.nodes.data() + panel * k, k);
    std::vector<double> re(k), im(k);
    for (std::size_t i = 0; i < k; ++i) {
        re[i] = values[panel * k + i].real();
        im[i] = values[panel * k + i].imag();
    }
    return {lagrange_interpolate(x, re, r), lagrange_interpolate(x, im, r)};
}

SpectralGrid make_spectral_grid(double lambda_max, int panels, int order) {
    if (!(lambda_max > 0.0) || panels < 1 || order < 1) throw InvalidArgument("make_spectral_grid: bad parameters");
    auto q = composite_gauss_legendre(0.0, lambda_max, panels, order);
    SpectralGrid g;
    g.nodes = std::move(q.nodes);
    g.weights = std::move(q.weights);
    g.lambda_max = lambda_max;
    return g;
}

SpectralGrid make_band_grid(double lo, double hi, int panels, int order) {
    if (!(lo >= 0.0 && hi > lo) || panels < 1 || order < 1) throw InvalidArgument("make_band_grid: bad parameters");
    auto q = composite_gauss_legendre(lo, hi, panels, order);
    SpectralGrid g;
    g.nodes = std::move(q.nodes);
    g.weights = std::move(q.weights);
    g.lambda_max = hi;
    return g;
}

SpectralGrid default_spectral_grid(double Lambda) { return make_spectral_grid(std::max(4.0 * Lambda, 128.0), 256, 16); }

SpectralFunction::SpectralFunction(SpectralGrid g, std::vector<complex> v, ModelParams mp)
    : grid(std::move(g)), values(std::move(v)), params(mp) {
    if (values.size() != grid.size()) throw InvalidArgument("SpectralFunction: value count does not match grid");
}

SpectralFunction SpectralFunction::sample(const SpectralGrid& g, const ModelParams& mp, const std::function<complex(double)>& f) {
    std::vector<complex> v(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) v[i] = f(g.nodes[i]);
    return SpectralFunction(g, std::move(v), mp);
}

SphereGrid make_sphere_grid(int d, int n) {
    if (n < 2) throw InvalidArgument("make_sphere_grid: need n ≥ 2");
    SphereGrid g;
    g.d = d;
    if (d == 2) {
        for (int j = 0; j < n; ++j) {
            const double th = 2.0 * kPi * j / n;
            g.nodes.push_back(std::cos(th));
            g.nodes.push_back(std::sin(th));
            g.weights.push_back(2.0 * kPi / n);
            g.polar.push_back(th <= kPi ? th : th - 2.0 * kPi);
            g.neighbours.emplace_back(j, (j + 1) % n);
        }
        return g;
    }
    if (d == 3) {
        const auto& q = gauss_legendre(n);
        const int m = 2 * n;
        for (int i = 0; i < n; ++i) {
            const double c = q.nodes[i];
            const double s = std::sqrt(std::max(0.0, 1.0 - c * c));
            for (int j = 0; j < m; ++j) {
                const double ph = 2.0 * kPi * j / m;
                g.nodes.insert(g.nodes.end(), {c, s * std::cos(ph), s * std::sin(ph)});
                g.weights.push_back(q.weights[i] * 2.0 * kPi / m);
                g.polar.push_back(std::acos(c));
                const std::size_t id = static_cast<std::size_t>(i * m + j);
                g.neighbours.emplace_back(id, static_cast<std::size_t>(i * m + (j + 1) % m));
                if (i + 1 < n) g.neighbours.emplace_back(id, id + m);
            }
        }
        return g;
    }
    throw InvalidArgument("make_sphere_grid: only d = 2 and d = 3 are supported");
}

SphereGrid make_cap_grid(int d, double theta_max, int n) {
    if (!(theta_max > 0.0) || theta_max > kPi || n < 1) throw InvalidArgument("make_cap_grid: bad parameters");
    SphereGrid g;
    g.d = d;
    if (d == 2) {
        const auto q = composite_gauss_legendre(-theta_max, theta_max, round_up_nodes(2 * n), 16);
        for (std::size_t j = 0; j < q.size(); ++j) {
            const double th = q.nodes[j];
            g.nodes.push_back(std::cos(th));
            g.nodes.push_back(std::sin(th));
            g.weights.push_back(q.weights[j]);
            g.polar.push_back(th);
            if (j + 1 < q.size()) g.neighbours.emplace_back(j, j + 1);
        }
        return g;
    }
    if (d == 3) {
        const auto q = composite_gauss_legendre(0.0, theta_max, round_up_nodes(n), 16);
        const int m = std::max(8, 2 * n);
        const std::size_t nt = q.size();
        for (std::size_t i = 0; i < nt; ++i) {
            const double th = q.nodes[i];
            for (int j = 0; j < m; ++j) {
                const double ph = 2.0 * kPi * j / m;
                g.nodes.insert(g.nodes.end(), {std::cos(th), std::sin(th) * std::cos(ph), std::sin(th) * std::sin(ph)});
                g.weights.push_back(q.weights[i] * std::sin(th) * 2.0 * kPi / m);
                g.polar.push_back(th);
                const std::size_t id = i * m + j;
                g.neighbours.emplace_back(id, i * m + (j + 1) % m);
                if (i + 1 < nt) g.neighbours.emplace_back(id, id + m);
            }
        }
        return g;
    }
    throw InvalidArgument("make_cap_grid: only d = 2 and d = 3 are supported");
}

SphereFunction::SphereFunction(SphereGrid g, std::vector<complex> v) : grid(std::move(g)), values(std::move(v)) {
    if (values.size() != grid.size()) throw InvalidArgument("SphereFunction: value count does not match grid");
}

SphereFunction SphereFunction::sample(const SphereGrid& g, const std::function<complex(std::span<const double>)>& f) {
    std::vector<complex> v(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) v[i] = f(g.node(i));
    return SphereFunction(g, std::move(v));
}

PolarFunction::PolarFunction(RadialGrid g, int nt, std::vector<complex> v)
    : radial(std::move(g)), n_theta(nt), values(std::move(v)) {
    if (n_theta < 2 || values.size() != radial.size() * static_cast<std::size_t>(n_theta))
        throw InvalidArgument("PolarFunction: value count does not match grid");
}

PolarFunction PolarFunction::sample(const RadialGrid& g, int nt, const std::function<complex(double, double)>& f) {
    std::vector<complex> v(g.size() * nt);
    for (std::size_t i = 0; i < g.size(); ++i)
        for (int j = 0; j < nt; ++j) v[i * nt + j] = f(g.nodes[i], 2.0 * kPi * j / nt);
    return PolarFunction(g, nt, std::move(v));
}

double PolarFunction::theta(int j) const { return 2.0 * kPi * j / n_theta; }

}  // namespace hyperbolic

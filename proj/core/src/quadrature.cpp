#include "hyperbolic/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>

#include "hyperbolic/error.hpp"

namespace hyperbolic {

namespace {

QuadratureRule compute_gauss_legendre(int n) {
    QuadratureRule rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    const int half = (n + 1) / 2;
    for (int i = 0; i < half; ++i) {
        double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0;
            double p1 = x;
            for (int k = 2; k <= n; ++k) {
                const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-16) break;
        }
        // Recompute the derivative at the converged root.
        double p0 = 1.0;
        double p1 = x;
        for (int k = 2; k <= n; ++k) {
            const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
            p0 = p1;
            p1 = p2;
        }
        dp = n * (x * p1 - p0) / (x * x - 1.0);
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        rule.nodes[i] = -x;
        rule.nodes[n - 1 - i] = x;
        rule.weights[i] = w;
        rule.weights[n - 1 - i] = w;
    }
    if (n % 2 == 1) rule.nodes[n / 2] = 0.0;
    return rule;
}

}  // namespace

const QuadratureRule& gauss_legendre(int n) {
    if (n < 1) throw InvalidArgument("gauss_legendre: n must be positive");
    static std::mutex mutex;
    static std::map<int, QuadratureRule> cache;
    std::lock_guard lock(mutex);
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, compute_gauss_legendre(n)).first;
    return it->second;
}

QuadratureRule composite_gauss_legendre(double a, double b, int panels, int order) {
    if (panels < 1) throw InvalidArgument("composite_gauss_legendre: panels must be positive");
    std::vector<double> edges(panels + 1);
    for (int i = 0; i <= panels; ++i) edges[i] = a + (b - a) * i / panels;
    edges[panels] = b;
    return composite_gauss_legendre(edges, order);
}

QuadratureRule composite_gauss_legendre(std::span<const double> edges, int order) {
    if (edges.size() < 2) throw InvalidArgument("composite_gauss_legendre: need at least two edges");
    const auto& base = gauss_legendre(order);
    QuadratureRule rule;
    rule.nodes.reserve((edges.size() - 1) * order);
    rule.weights.reserve((edges.size() - 1) * order);
    for (std::size_t p = 0; p + 1 < edges.size(); ++p) {
        const double mid = 0.5 * (edges[p] + edges[p + 1]);
        const double half = 0.5 * (edges[p + 1] - edges[p]);
        for (int j = 0; j < order; ++j) {
            rule.nodes.push_back(mid + half * base.nodes[j]);
            rule.weights.push_back(half * base.weights[j]);
        }
    }
    return rule;
}

double lagrange_interpolate(std::span<const double> nodes, std::span<const double> values, double x) {
    const std::size_t n = nodes.size();
    double num = 0.0;
    double den = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
        double wj = 1.0;
        for (std::size_t k = 0; k < n; ++k)
            if (k != j) wj /= (nodes[j] - nodes[k]);
        const double diff = x - nodes[j];
        if (diff == 0.0) return values[j];
        const double t = wj / diff;
        num += t * values[j];
        den += t;
    }
    return num / den;
}

}  // namespace hyperbolic

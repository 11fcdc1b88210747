#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace hyperbolic {

struct QuadratureRule {
    std::vector<double> nodes;
    std::vector<double> weights;

    std::size_t size() const noexcept { return nodes.size(); }
};

/// Gauss–Legendre rule with n points on [-1, 1].
///
/// Nodes are ascending. Rules are computed by Newton iteration on P_n and
/// cached; repeated calls for the same n are cheap.
const QuadratureRule& gauss_legendre(int n);

/// Composite Gauss–Legendre rule on [a, b]: `panels` equal panels of `order` points.
QuadratureRule composite_gauss_legendre(double a, double b, int panels, int order);

/// Composite rule on arbitrary panel edges (ascending).
QuadratureRule composite_gauss_legendre(std::span<const double> edges, int order);

/// Barycentric Lagrange interpolation through `nodes` (distinct).
double lagrange_interpolate(std::span<const double> nodes, std::span<const double> values, double x);

}  // namespace hyperbolic

#pragma once

#include <cmath>
#include <random>
#include <vector>

#include <hyperbolic/geometry.hpp>

namespace testing {

inline std::vector<double> random_unit(std::mt19937_64& rng, int d) {
    std::normal_distribution<double> n;
    std::vector<double> w(d);
    double s = 0.0;
    for (auto& x : w) x = n(rng), s += x * x;
    for (auto& x : w) x /= std::sqrt(s);
    return w;
}

inline hyperbolic::AmbientPoint random_point(std::mt19937_64& rng, int d, double r_max = 4.0) {
    std::uniform_real_distribution<double> u(0.0, r_max);
    return hyperbolic::polar_to_ambient({u(rng), random_unit(rng, d)}, hyperbolic::ModelParams(d));
}

inline double rel(double a, double b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); }

}  // namespace testing

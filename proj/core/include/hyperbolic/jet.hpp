#pragma once

#include <array>
#include <cmath>
#include <cstddef>

namespace hyperbolic {

/// Truncated Taylor series c₀ + c₁h + … + c_N h^N of a function at a point.
/// Arithmetic propagates coefficients exactly (up to rounding), so
/// derivatives never go through finite differences.
template <std::size_t N>
struct Jet {
    std::array<double, N + 1> c{};

    Jet() = default;
    Jet(double value) { c[0] = value; }  // NOLINT(implicit)

    /// The identity jet x₀ + h.
    static Jet variable(double x0) {
        Jet j(x0);
        if constexpr (N >= 1) j.c[1] = 1.0;
        return j;
    }

    double value() const { return c[0]; }
    /// k-th derivative at the expansion point.
    double derivative(std::size_t k) const {
        double f = 1.0;
        for (std::size_t i = 2; i <= k; ++i) f *= static_cast<double>(i);
        return c[k] * f;
    }

    Jet& operator+=(const Jet& o) { for (std::size_t k = 0; k <= N; ++k) c[k] += o.c[k]; return *this; }
    Jet& operator-=(const Jet& o) { for (std::size_t k = 0; k <= N; ++k) c[k] -= o.c[k]; return *this; }
    Jet& operator*=(double s) { for (auto& x : c) x *= s; return *this; }
    Jet operator-() const { Jet r = *this; r *= -1.0; return r; }
};

template <std::size_t N> Jet<N> operator+(Jet<N> a, const Jet<N>& b) { return a += b; }
template <std::size_t N> Jet<N> operator-(Jet<N> a, const Jet<N>& b) { return a -= b; }
template <std::size_t N> Jet<N> operator+(Jet<N> a, double s) { a.c[0] += s; return a; }
template <std::size_t N> Jet<N> operator+(double s, Jet<N> a) { a.c[0] += s; return a; }
template <std::size_t N> Jet<N> operator-(Jet<N> a, double s) { a.c[0] -= s; return a; }
template <std::size_t N> Jet<N> operator-(double s, const Jet<N>& a) { Jet<N> r = -a; r.c[0] += s; return r; }
template <std::size_t N> Jet<N> operator*(Jet<N> a, double s) { return a *= s; }
template <std::size_t N> Jet<N> operator*(double s, Jet<N> a) { return a *= s; }
template <std::size_t N> Jet<N> operator/(Jet<N> a, double s) { return a *= 1.0 / s; }

template <std::size_t N>
Jet<N> operator*(const Jet<N>& a, const Jet<N>& b) {
    Jet<N> r;
    for (std::size_t k = 0; k <= N; ++k)
        for (std::size_t i = 0; i <= k; ++i) r.c[k] += a.c[i] * b.c[k - i];
    return r;
}

template <std::size_t N>
Jet<N> operator/(const Jet<N>& a, const Jet<N>& b) {
    Jet<N> q;
    for (std::size_t k = 0; k <= N; ++k) {
        double acc = a.c[k];
        for (std::size_t i = 0; i < k; ++i) acc -= q.c[i] * b.c[k - i];
        q.c[k] = acc / b.c[0];
    }
    return q;
}

template <std::size_t N> Jet<N> operator/(double s, const Jet<N>& b) { return Jet<N>(s) / b; }

template <std::size_t N>
Jet<N> exp(const Jet<N>& a) {
    Jet<N> e;
    e.c[0] = std::exp(a.c[0]);
    for (std::size_t k = 1; k <= N; ++k) {
        double acc = 0.0;
        for (std::size_t j = 1; j <= k; ++j) acc += static_cast<double>(j) * a.c[j] * e.c[k - j];
        e.c[k] = acc / static_cast<double>(k);
    }
    return e;
}

template <std::size_t N>
Jet<N> log(const Jet<N>& a) {
    Jet<N> l;
    l.c[0] = std::log(a.c[0]);
    for (std::size_t k = 1; k <= N; ++k) {
        double acc = static_cast<double>(k) * a.c[k];
        for (std::size_t j = 1; j < k; ++j) acc -= static_cast<double>(j) * l.c[j] * a.c[k - j];
        l.c[k] = acc / (static_cast<double>(k) * a.c[0]);
    }
    return l;
}

template <std::size_t N>
void sincos(const Jet<N>& a, Jet<N>& s, Jet<N>& co) {
    s = Jet<N>(std::sin(a.c[0]));
    co = Jet<N>(std::cos(a.c[0]));
    for (std::size_t k = 1; k <= N; ++k) {
        double as = 0.0, ac = 0.0;
        for (std::size_t j = 1; j <= k; ++j) {
            as += static_cast<double>(j) * a.c[j] * co.c[k - j];
            ac -= static_cast<double>(j) * a.c[j] * s.c[k - j];
        }
        s.c[k] = as / static_cast<double>(k);
        co.c[k] = ac / static_cast<double>(k);
    }
}

template <std::size_t N> Jet<N> sin(const Jet<N>& a) { Jet<N> s, c; sincos(a, s, c); return s; }
template <std::size_t N> Jet<N> cos(const Jet<N>& a) { Jet<N> s, c; sincos(a, s, c); return c; }

template <std::size_t N>
Jet<N> sqrt(const Jet<N>& a) {
    Jet<N> s;
    s.c[0] = std::sqrt(a.c[0]);
    for (std::size_t k = 1; k <= N; ++k) {
        double acc = a.c[k];
        for (std::size_t j = 1; j < k; ++j) acc -= s.c[j] * s.c[k - j];
        s.c[k] = acc / (2.0 * s.c[0]);
    }
    return s;
}

template <std::size_t N>
Jet<N> sinh(const Jet<N>& a) { return 0.5 * (exp(a) - exp(-a)); }
template <std::size_t N>
Jet<N> cosh(const Jet<N>& a) { return 0.5 * (exp(a) + exp(-a)); }

/// d/dh of the series; the top coefficient is lost.
template <std::size_t N>
Jet<N> differentiate(const Jet<N>& a) {
    Jet<N> r;
    for (std::size_t k = 0; k < N; ++k) r.c[k] = static_cast<double>(k + 1) * a.c[k + 1];
    return r;
}

/// Jet of order used by kernel synthesis; enough for (1/sh r ∂_r)^3.
using KernelJet = Jet<4>;

}  // namespace hyperbolic

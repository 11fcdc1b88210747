#include "hyperbolic/transform.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "hyperbolic/error.hpp"
#include "hyperbolic/quadrature.hpp"
#include "hyperbolic/specfun.hpp"

namespace hyperbolic {

namespace {
constexpr double kPi = std::numbers::pi;

double sh_power(double r, double rho) { return r == 0.0 ? (rho == 0.0 ? 1.0 : 0.0) : std::exp(2.0 * rho * log_sinh(r)); }
}  // namespace

SpectralFunction forward_radial_ft(const RadialFunction& f, const SpectralGrid& lg, double tail_tolerance) {
    const auto& mp = f.params;
    const auto& rg = f.grid;
    std::vector<double> weight(rg.size());
    double total = 0.0, tail = 0.0;
    const double last_edge = rg.edges.size() >= 2 ? rg.edges[rg.edges.size() - 2] : 0.0;
    for (std::size_t i = 0; i < rg.size(); ++i) {
        weight[i] = mp.omega_sphere * rg.weights[i] * sh_power(rg.nodes[i], mp.rho);
        const double a = weight[i] * std::abs(f.values[i]);
        total += a;
        if (rg.nodes[i] >= last_edge) tail += a;
    }
    if (total > 0.0 && tail > tail_tolerance * total) {
        std::ostringstream os;
        os << "forward_radial_ft: last radial panel holds " << tail / total << " of the mass (r_max = " << rg.r_max << ")";
        throw TruncationError(os.str(), tail / total);
    }
    SphericalTable table(mp, lg.nodes, rg.nodes);
    std::vector<complex> out(lg.size(), 0.0);
    for (std::size_t i = 0; i < rg.size(); ++i) {
        const complex fw = weight[i] * f.values[i];
        if (fw == 0.0) continue;
        for (std::size_t j = 0; j < lg.size(); ++j) out[j] += fw * table(i, j);
    }
    return SpectralFunction(lg, std::move(out), mp);
}

RadialFunction inverse_radial_ft(const SpectralFunction& ft, const RadialGrid& rg, double tail_tolerance) {
    const auto& mp = ft.params;
    const auto& lg = ft.grid;
    const double kappa = inversion_constant(mp);
    std::vector<complex> a(lg.size());
    double total = 0.0, tail = 0.0;
    for (std::size_t j = 0; j < lg.size(); ++j) {
        a[j] = kappa * lg.weights[j] * plancherel_density(lg.nodes[j], mp) * ft.values[j];
        total += std::abs(a[j]);
        if (lg.nodes[j] >= 0.5 * lg.lambda_max) tail += std::abs(a[j]);
    }
    if (total > 0.0 && tail > tail_tolerance * total) {
        std::ostringstream os;
        os << "inverse_radial_ft: top octave holds " << tail / total << " of the spectral mass (λ_max = " << lg.lambda_max << ")";
        throw TruncationError(os.str(), tail / total);
    }
    SphericalTable table(mp, lg.nodes, rg.nodes);
    std::vector<complex> out(rg.size(), 0.0);
    for (std::size_t i = 0; i < rg.size(); ++i) {
        complex acc = 0.0;
        for (std::size_t j = 0; j < lg.size(); ++j) acc += a[j] * table(i, j);
        out[i] = acc;
    }
    return RadialFunction(rg, std::move(out), mp);
}

namespace {

QuadratureRule theta_rule(const ConvolutionOptions& opt) {
    std::vector<double> edges{0.0};
    for (int l = opt.theta_levels; l >= 1; --l) edges.push_back(kPi * std::ldexp(1.0, -l));
    edges.push_back(kPi);
    return composite_gauss_legendre(edges, opt.order);
}

}  // namespace

RadialFunction radial_convolution(const RadialFunction& f, const std::function<complex(double)>& K,
                                  const ConvolutionOptions& opt) {
    const auto& mp = f.params;
    const auto& rg = f.grid;
    const auto tq = theta_rule(opt);
    // Angular measure of the (d−2)-sphere orthogonal to the axis.
    const double lateral = mp.d == 2 ? 2.0 : ModelParams::sphere_area(mp.d - 1);
    std::vector<double> tw(tq.size()), half_sin2(tq.size());
    for (std::size_t t = 0; t < tq.size(); ++t) {
        tw[t] = lateral * tq.weights[t] * std::pow(std::sin(tq.nodes[t]), mp.d - 2);
        const double s = std::sin(0.5 * tq.nodes[t]);
        half_sin2[t] = s * s;
    }
    std::vector<double> shr(rg.size());
    std::vector<complex> fw(rg.size());
    for (std::size_t i = 0; i < rg.size(); ++i) {
        shr[i] = std::sinh(rg.nodes[i]);
        fw[i] = rg.weights[i] * sh_power(rg.nodes[i], mp.rho) * f.values[i];
    }
    std::vector<complex> out(rg.size(), 0.0);
    for (std::size_t i = 0; i < rg.size(); ++i) {
        complex acc = 0.0;
        for (std::size_t k = 0; k < rg.size(); ++k) {
            if (fw[k] == 0.0) continue;
            const double sh_half = std::sinh(0.5 * (rg.nodes[i] - rg.nodes[k]));
            const double base = sh_half * sh_half;
            const double cross = shr[i] * shr[k];
            complex ang = 0.0;
            for (std::size_t t = 0; t < tq.size(); ++t) {
                // sh(d/2)² = sh((r−r′)/2)² + sh r sh r′ sin²(θ/2)
                const double dist = 2.0 * std::asinh(std::sqrt(base + cross * half_sin2[t]));
                ang += tw[t] * K(dist);
            }
            acc += fw[k] * ang;
        }
        out[i] = acc;
    }
    return RadialFunction(rg, std::move(out), mp);
}

RadialFunction radial_convolution(const RadialFunction& f, const RadialFunction& K, const ConvolutionOptions& opt) {
    if (f.params.d != K.params.d) throw InvalidArgument("radial_convolution: dimension mismatch");
    return radial_convolution(f, [&K](double r) { return K.at(r); }, opt);
}

namespace {

// Real and imaginary parts of m̂ as jets at a radius.
class HatEvaluator {
public:
    HatEvaluator(const MultiplierSymbol& m, double s_max) : m_(m) {
        if (m.hat) return;
        if (!m.band) throw InvalidArgument("multiplier_kernel: symbol " + m.label + " needs either m̂ or a band");
        const auto [lo, hi] = *m.band;
        const int panels = static_cast<int>(std::ceil((12.0 * hi * s_max / (2.0 * kPi) + 64.0) / 16.0));
        build(lo, hi, panels, nodes_, mw_);
        // Resolution check: the rule must agree with its refinement at the far end.
        std::vector<double> n2;
        std::vector<complex> w2;
        build(lo, hi, 2 * panels, n2, w2);
        double scale = 0.0;
        for (const auto& w : mw_) scale += std::abs(w);
        const complex a = raw(nodes_, mw_, s_max, 0), b = raw(n2, w2, s_max, 0);
        if (std::abs(a - b) > 1e-10 * std::max(scale, 1e-300)) {
            std::ostringstream os;
            os << "multiplier_kernel: m̂ under-resolved for symbol " << m.label;
            throw AccuracyError(os.str(), std::abs(a - b) / scale);
        }
    }

    void at(double r, KernelJet& re, KernelJet& im) const {
        if (m_.hat) {
            re = m_.hat(KernelJet::variable(r));
            im = KernelJet(0.0);
            return;
        }
        double fact = 1.0;
        for (std::size_t k = 0; k <= 4; ++k) {
            if (k > 1) fact *= static_cast<double>(k);
            const complex v = raw(nodes_, mw_, r, static_cast<int>(k)) / fact;
            re.c[k] = v.real();
            im.c[k] = v.imag();
        }
    }

private:
    void build(double lo, double hi, int panels, std::vector<double>& nodes, std::vector<complex>& mw) const {
        const auto q = composite_gauss_legendre(lo, hi, panels, 16);
        nodes = q.nodes;
        mw.resize(q.size());
        for (std::size_t i = 0; i < q.size(); ++i) mw[i] = std::sqrt(2.0 / kPi) * q.weights[i] * m_.eval(q.nodes[i]);
    }
    // k-th derivative of √(2/π)∫ m(λ) cos(λr) dλ.
    static complex raw(const std::vector<double>& nodes, const std::vector<complex>& mw, double r, int k) {
        complex acc = 0.0;
        for (std::size_t i = 0; i < nodes.size(); ++i)
            acc += mw[i] * std::pow(nodes[i], k) * std::cos(nodes[i] * r + 0.5 * kPi * k);
        return acc;
    }

    const MultiplierSymbol& m_;
    std::vector<double> nodes_;
    std::vector<complex> mw_;
};

// (−(2π)^{−1} sh^{−1} r ∂_r)^n applied to a jet expanded at r.
double radial_operator(KernelJet j, double r, int n) {
    const KernelJet inv_sh = 1.0 / sinh(KernelJet::variable(r));
    for (int i = 0; i < n; ++i) j = differentiate(j) * inv_sh * (-1.0 / (2.0 * kPi));
    return j.value();
}

complex odd_kernel(const HatEvaluator& hat, double r, const ModelParams& mp) {
    KernelJet re, im;
    hat.at(r, re, im);
    const int n = static_cast<int>(mp.rho);
    const double pre = kOddKernelCalibration / std::sqrt(2.0 * kPi);
    return pre * complex(radial_operator(re, r, n), radial_operator(im, r, n));
}

complex even_integrand(const HatEvaluator& hat, double s, int n) {
    KernelJet re, im;
    hat.at(s, re, im);
    return complex(radial_operator(re, s, n), radial_operator(im, s, n));
}

complex even_kernel(const HatEvaluator& hat, double r, double s_max, double freq, const ModelParams& mp) {
    if (r >= s_max) return 0.0;
    const int n = mp.d / 2;
    const double per_unit = std::max(1.0, 1.5 * 12.0 * freq / (2.0 * kPi) / 16.0);
    const double a = std::min(1.0, s_max - r);
    const double chr = std::cosh(r), shr = std::sinh(r);
    complex acc = 0.0;
    // [r, r+a] with ch s − ch r = u²: sh s ds / √(ch s − ch r) = 2 du.
    {
        const double u_max = std::sqrt(2.0 * std::sinh(r + 0.5 * a) * std::sinh(0.5 * a));
        const int panels = 2 + static_cast<int>(std::ceil(per_unit * a));
        const auto q = composite_gauss_legendre(0.0, u_max, panels, 16);
        for (std::size_t i = 0; i < q.size(); ++i) {
            const double u2 = q.nodes[i] * q.nodes[i];
            const double y = chr + u2;
            const double s = std::log(y + std::sqrt(shr * shr + 2.0 * u2 * chr + u2 * u2));
            acc += q.weights[i] * 2.0 * even_integrand(hat, s, n);
        }
    }
    if (s_max > r + a) {
        const int panels = 1 + static_cast<int>(std::ceil(per_unit * (s_max - r - a)));
        const auto q = composite_gauss_legendre(r + a, s_max, panels, 16);
        for (std::size_t i = 0; i < q.size(); ++i) {
            const double s = q.nodes[i];
            const double gap = 2.0 * std::sinh(0.5 * (s + r)) * std::sinh(0.5 * (s - r));
            acc += q.weights[i] * even_integrand(hat, s, n) * std::sinh(s) / std::sqrt(gap);
        }
    }
    return kEvenKernelCalibration / std::sqrt(kPi) * acc;
}

double kernel_s_max(const MultiplierSymbol& m, const KernelOptions& opt, double fallback) {
    if (m.hat_support) return *m.hat_support;
    return opt.s_max > 0.0 ? opt.s_max : fallback;
}

void check_kernel_dimension(const ModelParams& mp) {
    if (mp.d < 2 || mp.d > 6) throw InvalidArgument("multiplier_kernel: d must be in 2..6");
}

}  // namespace

RadialFunction multiplier_kernel(const MultiplierSymbol& m, const RadialGrid& rg, const ModelParams& mp,
                                 const KernelOptions& opt) {
    check_kernel_dimension(mp);
    const double s_max = kernel_s_max(m, opt, 2.0 * rg.r_max);
    const HatEvaluator hat(m, std::max(s_max, rg.r_max));
    std::vector<complex> out(rg.size());
    for (std::size_t i = 0; i < rg.size(); ++i) {
        const double r = rg.nodes[i];
        if (mp.d % 2 == 1) {
            out[i] = (m.hat_support && r > *m.hat_support) ? complex(0.0) : odd_kernel(hat, r, mp);
        } else {
            out[i] = even_kernel(hat, r, s_max, m.frequency, mp);
        }
    }
    return RadialFunction(rg, std::move(out), mp);
}

complex multiplier_kernel_at(const MultiplierSymbol& m, double r, const ModelParams& mp, const KernelOptions& opt) {
    check_kernel_dimension(mp);
    if (!(r > 0.0)) throw InvalidArgument("multiplier_kernel_at: r must be positive");
    const double s_max = kernel_s_max(m, opt, 32.0);
    const HatEvaluator hat(m, std::max(s_max, r));
    if (mp.d % 2 == 1) return (m.hat_support && r > *m.hat_support) ? complex(0.0) : odd_kernel(hat, r, mp);
    return even_kernel(hat, r, s_max, m.frequency, mp);
}

namespace {

template <class T>
T smooth_step(const T& t) {  // e^{−1/t} for t > 0
    return exp(-1.0 / t);
}

double smooth_step(double t) { return t > 0.0 ? std::exp(-1.0 / t) : 0.0; }

}  // namespace

double bump_beta(double xi) {
    const double a = std::abs(xi);
    if (a <= 1.0) return 1.0;
    if (a >= 2.0) return 0.0;
    const double up = smooth_step(2.0 - a);
    return up / (up + smooth_step(a - 1.0));
}

KernelJet bump_beta(const KernelJet& xi) {
    const KernelJet a = xi.value() < 0.0 ? -xi : xi;
    if (a.value() <= 1.0) return KernelJet(1.0);
    if (a.value() >= 2.0) return KernelJet(0.0);
    const KernelJet up = smooth_step(2.0 - a);
    return up / (up + smooth_step(a - 1.0));
}

double dyadic_chi_hat(double xi) { return bump_beta(xi) / std::sqrt(2.0 * kPi); }

double dyadic_psi_hat(double xi) { return (bump_beta(0.5 * xi) - bump_beta(xi)) / std::sqrt(2.0 * kPi); }

double dyadic_chi(double x) {
    // π^{−1}[∫₀¹ cos(ξx) dξ + ∫₁² β(ξ) cos(ξx) dξ]
    const double head = std::abs(x) < 1e-8 ? 1.0 - x * x / 6.0 : std::sin(x) / x;
    const int panels = 4 + static_cast<int>(std::ceil(std::abs(x) / 4.0));
    const auto q = composite_gauss_legendre(1.0, 2.0, panels, 16);
    double tail = 0.0;
    for (std::size_t i = 0; i < q.size(); ++i) tail += q.weights[i] * bump_beta(q.nodes[i]) * std::cos(q.nodes[i] * x);
    return (head + tail) / kPi;
}

double dyadic_psi(double x) { return 2.0 * dyadic_chi(2.0 * x) - dyadic_chi(x); }

int dyadic_k0(double Lambda) {
    if (!(Lambda > 0.0)) throw DomainError("dyadic_k0: Λ must be positive");
    return static_cast<int>(std::lround(-std::log2(Lambda)));
}

MultiplierSymbol dyadic_symbol(const DyadicPiece& piece) {
    const double L = piece.Lambda;
    const double scale = std::ldexp(1.0, piece.k);  // 2^k
    MultiplierSymbol m;
    m.even = true;
    m.frequency = L + 4.0 / scale;
    std::ostringstream os;
    if (piece.kind == DyadicKind::J) {
        os << "J[Lambda=" << L << ",k0=" << piece.k << "]";
        m.eval = [L, scale](double lambda) -> complex {
            return scale * (dyadic_chi(scale * (lambda - L)) + dyadic_chi(scale * (lambda + L)));
        };
        m.hat = [L, scale](const KernelJet& r) { return 2.0 * cos(L * r) * bump_beta(r / scale) / std::sqrt(2.0 * kPi); };
        m.hat_support = 2.0 * scale;
    } else {
        os << "K[Lambda=" << L << ",k=" << piece.k << "]";
        m.eval = [L, scale](double lambda) -> complex {
            return scale * (dyadic_psi(scale * (lambda - L)) + dyadic_psi(scale * (lambda + L)));
        };
        m.hat = [L, scale](const KernelJet& r) {
            return 2.0 * cos(L * r) * (bump_beta(0.5 * r / scale) - bump_beta(r / scale)) / std::sqrt(2.0 * kPi);
        };
        m.hat_support = 4.0 * scale;
    }
    m.label = os.str();
    return m;
}

std::vector<std::pair<DyadicPiece, RadialFunction>> dyadic_projector_kernels(double Lambda, int k_lo, int k_hi,
                                                                             const RadialGrid& rg,
                                                                             const ModelParams& mp) {
    if (!(Lambda > 1.0)) throw DomainError("dyadic_projector_kernels: Λ must exceed 1");
    const int k0 = dyadic_k0(Lambda);
    std::vector<std::pair<DyadicPiece, RadialFunction>> out;
    const DyadicPiece j{Lambda, k0, DyadicKind::J};
    out.emplace_back(j, multiplier_kernel(dyadic_symbol(j), rg, mp));
    for (int k = std::max(k_lo, k0); k <= k_hi; ++k) {
        const DyadicPiece p{Lambda, k, DyadicKind::K};
        out.emplace_back(p, multiplier_kernel(dyadic_symbol(p), rg, mp));
    }
    return out;
}

}  // namespace hyperbolic

#include "hyperbolic/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "hyperbolic/error.hpp"
#include "hyperbolic/specfun.hpp"

namespace hyperbolic {

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kTie = 1e-12;
const double kNaN = std::numeric_limits<double>::quiet_NaN();
}  // namespace

std::string to_string(PredictionContext c) {
    switch (c) {
        case PredictionContext::ProjectorDuality: return "projector-duality";
        case PredictionContext::ProjectorOffDuality: return "projector-offduality";
        case PredictionContext::Resolvent: return "resolvent";
        case PredictionContext::DResolvent: return "dresolvent";
        case PredictionContext::SmallFreq: return "smallfreq";
        case PredictionContext::KnappLower: return "knapp-lower";
        case PredictionContext::RadialLower: return "radial-lower";
        case PredictionContext::ExtensionLower: return "extension-lower";
    }
    return "unknown";
}

std::string to_string(Region r) {
    switch (r) {
        case Region::I: return "I";
        case Region::II: return "II";
        case Region::III: return "III";
        case Region::IV: return "IV";
        case Region::Outside: return "outside";
    }
    return "unknown";
}

double p_stein_tomas(int d) {
    if (d < 2) throw InvalidArgument("p_stein_tomas: d must be at least 2");
    return 2.0 * (d + 1) / (d - 1.0);
}

double predicted_alpha(double p, int d) {
    if (!(p > 2.0)) throw DomainError("predicted_alpha: p must exceed 2");
    const double inv = std::isinf(p) ? 0.0 : 1.0 / p;
    if (p >= p_stein_tomas(d)) return d - 1.0 - 2.0 * d * inv;
    return (d - 1.0) * (0.5 - inv);
}

ExponentPrediction predict_projector(double p, int d) {
    ExponentPrediction e{PredictionContext::ProjectorDuality, d, p, 0.0, 0.0, predicted_alpha(p, d), p_stein_tomas(d), {}};
    if (p < e.p_st) e.constant_blowup = "(p-2)^{-1}+1";
    return e;
}

ExponentPrediction predicted_offduality_projector(double s, double q, int d) {
    if (!(s >= 1.0 && s < 2.0)) throw DomainError("predicted_offduality_projector: s must lie in [1, 2)");
    if (!(q > 2.0)) throw DomainError("predicted_offduality_projector: q must exceed 2");
    const double rho = 0.5 * (d - 1);
    const double iq = std::isinf(q) ? 0.0 : 1.0 / q;
    const double is = 1.0 / s;
    const double target = std::max(rho - d * iq, rho * (0.5 - iq));
    const double source = std::max(d * is - 0.5 * (d + 1), rho * (is - 0.5));
    ExponentPrediction e{PredictionContext::ProjectorOffDuality, d, 0.0, s, q, target + source, p_stein_tomas(d), {}};
    e.constant_blowup = "[(q-2)^{-1/2}+1][(2-s)^{-1/2}+1]";
    return e;
}

double region_exponent(Region r, double x, double y, int d, Diagram diagram) {
    const double rho = 0.5 * (d - 1);
    double base = kNaN;
    switch (r) {
        case Region::I: base = 0.5 * rho * (x - y) - 0.5; break;
        case Region::II: base = 0.5 * rho * (x - y) + 0.5 * d * (0.5 - y) - 0.75; break;
        case Region::III: base = 0.5 * d * (x - y) - 1.0; break;
        case Region::IV: base = 0.5 * d * (x - 0.5) - 0.75; break;
        case Region::Outside: return kNaN;
    }
    switch (diagram) {
        case Diagram::Resolvent: return base;
        case Diagram::DResolvent: return r == Region::III ? kNaN : base + 0.5;
        case Diagram::ProjectorRemark: return 2.0 * base + 1.0;
    }
    return kNaN;
}

namespace {

Region upper_label(bool above_yellow, bool beyond_purple) {
    if (above_yellow) return beyond_purple ? Region::IV : Region::I;
    return beyond_purple ? Region::III : Region::II;
}

// Upper half (x + y ≥ 1). Points on the yellow or purple line are assigned
// the adjacent region with the smaller exponent.
std::pair<Region, bool> classify_upper(double x, double y, int d, Diagram diagram) {
    const double yellow = (d - 1.0) / (2.0 * d);
    const double k = (d - 1.0) / (d + 1.0);
    const double py = y - yellow, pp = x + k * y - 1.0;
    const bool on_y = std::abs(py) <= kTie, on_p = std::abs(pp) <= kTie;
    std::vector<bool> ys = on_y ? std::vector<bool>{true, false} : std::vector<bool>{py > 0.0};
    std::vector<bool> ps = on_p ? std::vector<bool>{true, false} : std::vector<bool>{pp >= 0.0};
    Region best = Region::Outside;
    double best_e = INFINITY;
    for (bool a : ys)
        for (bool b : ps) {
            const Region r = upper_label(a, b);
            const double e = region_exponent(r, x, y, d, diagram);
            if (std::isnan(e)) continue;
            if (e < best_e - kTie) {
                best = r;
                best_e = e;
            }
        }
    return {best, on_y || on_p};
}

}  // namespace

RegionPoint classify_region(double x, double y, int d, Diagram diagram) {
    RegionPoint pt{x, y, Region::Outside, diagram, kNaN, false};
    if (d < 2) throw InvalidArgument("classify_region: d must be at least 2");
    if (x < 0.5 - kTie || y > 0.5 + kTie || x > 1.0 + kTie || y < -kTie) return pt;
    if (std::abs(x - 0.5) <= kTie && std::abs(y - 0.5) <= kTie) return pt;
    const double green = diagram == Diagram::Resolvent ? 2.0 / d : (diagram == Diagram::DResolvent ? 1.0 / d : INFINITY);
    if (x - y > green + kTie) return pt;
    pt.on_boundary = std::abs(x - y - green) <= kTie;

    if (std::abs(x + y - 1.0) <= kTie) {
        // Duality line, p = 1/y.
        const double p = y <= 0.0 ? INFINITY : 1.0 / y;
        const double split = diagram == Diagram::DResolvent ? 2.0 * d / (d - 1.0) : p_stein_tomas(d);
        if (diagram == Diagram::DResolvent && p > split + kTie) return pt;
        pt.region = p <= split + kTie ? Region::I : Region::III;
        pt.exponent = region_exponent(pt.region, x, y, d, diagram);
        pt.on_boundary = pt.on_boundary || std::abs(p - split) <= 1e-9;
        return pt;
    }
    double ux = x, uy = y;
    if (x + y < 1.0) {
        ux = 1.0 - y;
        uy = 1.0 - x;
    }
    const auto [region, boundary] = classify_upper(ux, uy, d, diagram);
    pt.region = region;
    pt.exponent = region_exponent(region, ux, uy, d, diagram);
    pt.on_boundary = pt.on_boundary || boundary;
    return pt;
}

double spherical_norm_exponent(double p, int d) {
    if (!(p > 2.0)) throw DomainError("spherical_norm_exponent: p must exceed 2");
    if (p > 2.0 * d / (d - 1.0)) return -d / p;
    return -0.5 * (d - 1);
}

NormResult spherical_lp_norm(double lambda, double p, const ModelParams& mp, double r_max) {
    const double per_unit = std::max(16.0, 1.5 * 12.0 * lambda / (2.0 * kPi));
    const int panels = static_cast<int>(std::ceil(r_max * per_unit / 16.0));
    const auto rg = make_radial_grid(r_max, panels, 16);
    const std::vector<double> ls{lambda};
    const SphericalTable table(mp, ls, rg.nodes);
    std::vector<complex> v(rg.size());
    for (std::size_t i = 0; i < rg.size(); ++i) v[i] = table(i, 0);
    return lp_norm_polar(RadialFunction(rg, std::move(v), mp), p);
}

namespace {

double conjugate(double p) { return std::isinf(p) ? 1.0 : p / (p - 1.0); }

double projector_ratio(double lambda, double p, const RadialFunction& f, const ModelParams& mp, double r_max) {
    const auto phi = spherical_lp_norm(lambda, p, mp, r_max);
    if (phi.divergent) return INFINITY;
    const double ft = std::abs(radial_transform_at(lambda, f));
    const double fn = lp_norm_polar(f, conjugate(p)).value;
    return harish_chandra_c(lambda, mp).density * ft * phi.value / fn;
}

double knapp_delta(double lambda) { return 1.0 / std::sqrt(lambda); }

struct KnappSample {
    IwasawaSample quad;
    std::vector<complex> values;
    double cap_l2 = 0.0;
    double delta = 0.0;
};

KnappSample knapp_sample(double lambda, double p, const ModelParams& mp, const ExperimentOptions& opt) {
    KnappSample k;
    k.delta = knapp_delta(lambda);
    const auto cap = knapp_cap(k.delta, mp.d, opt.cap_nodes);
    k.cap_l2 = sphere_lp_norm(cap, 2.0);
    k.quad = iwasawa_quadrature(knapp_region(lambda, k.delta, p, mp), mp, opt.s_nodes, opt.v_nodes);
    k.values = extension_operator(lambda, cap, std::span<const IwasawaPoint>(k.quad.points));
    return k;
}

double region_norm(const KnappSample& k, double p) {
    double acc = 0.0;
    for (std::size_t i = 0; i < k.values.size(); ++i) acc += k.quad.weights[i] * std::pow(std::abs(k.values[i]), p);
    return std::pow(acc, 1.0 / p);
}

ScalingResult make_result(std::string family, const std::vector<std::pair<double, double>>& pts, double predicted,
                          double alpha) {
    return {std::move(family), fit_scaling_exponent(pts), predicted, alpha};
}

}  // namespace

double radial_projector_ratio(double lambda, double p, const ModelParams& mp, const ExperimentOptions& opt) {
    const auto rg = make_radial_grid(6.0 / lambda, 4, 16);
    const auto f = RadialFunction::sample(rg, mp, [lambda](double r) { return std::exp(-lambda * lambda * r * r); });
    return projector_ratio(lambda, p, f, mp, opt.r_max);
}

SphereFunction knapp_cap(double delta, int d, int nodes) {
    if (!(delta > 0.0 && delta < 2.0)) throw DomainError("knapp_cap: δ must lie in (0, 2)");
    // |ω − e₁| < δ ⇔ θ₁ < 2 arcsin(δ/2)
    const auto grid = make_cap_grid(d, 2.0 * std::asin(0.5 * delta), nodes);
    return SphereFunction(grid, std::vector<complex>(grid.size(), 1.0));
}

IwasawaRegion knapp_region(double lambda, double delta, double p, const ModelParams& mp) {
    if (!(p > 2.0)) throw DomainError("knapp_region: p must exceed 2");
    const double s_hi = -0.5 * std::log(lambda * delta * delta);
    const double s_lo = s_hi - std::log(1e6) / (mp.rho * (p - 2.0));
    return {s_lo, s_hi, 0.0, 0.01 / (lambda * delta), true};
}

double knapp_extension_ratio(double lambda, double p, const ModelParams& mp, const ExperimentOptions& opt) {
    const auto k = knapp_sample(lambda, p, mp, opt);
    return region_norm(k, p) / k.cap_l2;
}

double knapp_pointwise_constant(double lambda, const ModelParams& mp, const ExperimentOptions& opt) {
    // The region's s-range does not depend on p beyond s_min; p = 4 gives a long range.
    const auto k = knapp_sample(lambda, 4.0, mp, opt);
    double c = INFINITY;
    const double scale = std::pow(lambda, mp.rho) * std::pow(k.delta, mp.d - 1);
    for (std::size_t i = 0; i < k.values.size(); ++i)
        c = std::min(c, std::abs(k.values[i]) / (scale * std::exp(mp.rho * k.quad.points[i].s)));
    return c;
}

ScalingResult run_projector_scaling(ProjectorFamily family, double p, int d, const std::vector<double>& lambdas,
                                    const ExperimentOptions& opt) {
    const ModelParams mp(d);
    std::vector<std::pair<double, double>> pts;
    if (family == ProjectorFamily::Radial) {
        for (double l : lambdas) pts.emplace_back(l, radial_projector_ratio(l, p, mp, opt));
        const double predicted = d - 1.0 - d / p + spherical_norm_exponent(p, d);
        return make_result("radial", pts, predicted, predicted_alpha(p, d));
    }
    for (double l : lambdas) {
        const double r = knapp_extension_ratio(l, p, mp, opt);
        pts.emplace_back(l, r * r);  // ‖P_λ‖ = ‖E_λ‖²_{L²→L^p}
    }
    return make_result("knapp", pts, (d - 1.0) * (0.5 - 1.0 / p), predicted_alpha(p, d));
}

ScalingResult run_smallfreq_check(int d, const std::vector<double>& Lambdas, double p, const ExperimentOptions& opt) {
    const ModelParams mp(d);
    const auto rg = make_radial_grid(8.0, 16, 16);
    const auto f = RadialFunction::sample(rg, mp, [](double r) { return std::exp(-r * r); });
    std::vector<std::pair<double, double>> pts;
    for (double L : Lambdas) {
        if (!(L > 0.0 && L <= 1.0)) throw DomainError("run_smallfreq_check: Λ must lie in (0, 1]");
        pts.emplace_back(L, projector_ratio(L, p, f, mp, opt.r_max));
    }
    return make_result("smallfreq", pts, 2.0, 2.0);
}

ExtensionLowerBounds run_extension_lower_bounds(double p, double q, int d, const std::vector<double>& lambdas,
                                                const ExperimentOptions& opt) {
    if (!(p >= 2.0)) throw DomainError("run_extension_lower_bounds: p must be at least 2");
    const ModelParams mp(d);
    const double rho = mp.rho;
    ExtensionLowerBounds out;
    const double one_p = std::pow(mp.omega_sphere, 1.0 / p);
    std::vector<std::pair<double, double>> cpts, kpts;
    for (double l : lambdas) {
        const auto n = spherical_lp_norm(l, q, mp, opt.r_max);
        if (n.divergent) {
            out.divergent = true;
            break;
        }
        cpts.emplace_back(l, std::sqrt(harish_chandra_c(l, mp).density) * n.value / one_p);
    }
    const double const_pred = q > 2.0 * d / (d - 1.0) ? rho - d / q : 0.0;
    out.constant_family.family = "constant";
    out.constant_family.predicted = const_pred;
    out.constant_family.alpha = const_pred;
    if (!out.divergent) out.constant_family.fit = fit_scaling_exponent(cpts);
    if (q > 2.0) {
        for (double l : lambdas) {
            const auto k = knapp_sample(l, q, mp, opt);
            kpts.emplace_back(l, region_norm(k, q) / sphere_lp_norm(knapp_cap(k.delta, d, opt.cap_nodes), p));
        }
        out.cap_family = make_result("cap", kpts, rho / p - rho / q, rho / p - rho / q);
    }
    return out;
}

double boost_covariance_error(double t, double lambda, int n_omega) {
    const ModelParams mp(2);
    const LorentzBoost U(t, 2);
    const auto center = U.inverse().apply(AmbientPoint::origin(2));
    const auto rg = make_radial_grid(6.0 + t, 36, 16);
    // angular oscillation of the plane wave near the shifted bump grows like λe^{|t|}
    int n_theta = 256;
    while (n_theta < 64.0 * lambda * std::exp(std::abs(t))) n_theta *= 2;
    auto gauss = [](double r) { return std::exp(-r * r); };
    const auto fU = PolarFunction::sample(rg, n_theta, [&](double r, double th) -> complex {
        const auto x = polar_to_ambient({r, {std::cos(th), std::sin(th)}}, mp);
        return gauss(geodesic_distance(x, center));
    });
    const auto f = RadialFunction::sample(rg, mp, [&](double r) -> complex { return gauss(r); });
    const complex ft = radial_transform_at(lambda, f);
    double worst = 0.0;
    for (int j = 0; j < n_omega; ++j) {
        const double th = 2.0 * kPi * j / n_omega;
        const std::vector<double> w{std::cos(th), std::sin(th)};
        const double factor = boost_action(U, w).factor;
        const complex expect = plane_wave_from_log(lambda, std::log(factor), mp.rho) * ft;
        worst = std::max(worst, std::abs(helgason_transform_d2(lambda, th, fU) - expect) / std::abs(ft));
    }
    return worst;
}

double boost_denominator(double t, double p, int n) {
    const ModelParams mp(2);
    const LorentzBoost U(t, 2);
    double acc = 0.0;
    for (int j = 0; j < n; ++j) {
        const double th = 2.0 * kPi * j / n;
        const std::vector<double> w{std::cos(th), std::sin(th)};
        const auto b = boost_action(U, w);
        const double g = 1.0;  // g(Uω)
        acc += std::pow(b.factor, -mp.rho * p) * std::pow(g, p);
    }
    return std::pow(acc * 2.0 * kPi / n, 1.0 / p);
}

DyadicBoundFit fit_dyadic_kernel_bounds(double Lambda, int d, int k_span, int samples) {
    constexpr double c = 0.5, C = 4.0;
    const ModelParams mp(d);
    DyadicBoundFit fit{Lambda, d};
    const int k0 = dyadic_k0(Lambda);
    const auto J = dyadic_symbol({Lambda, k0, DyadicKind::J});
    const double sj = 2.0 * std::ldexp(1.0, k0);
    for (int i = 1; i <= samples; ++i) {
        const double r = sj * i / samples;
        fit.c_J = std::max(fit.c_J, std::abs(multiplier_kernel_at(J, r, mp)) / std::pow(Lambda, d - 1));
    }
    for (int k = k0; k <= k0 + k_span; ++k) {
        const double s = std::ldexp(1.0, k);
        const auto K = dyadic_symbol({Lambda, k, DyadicKind::K});
        const double env = std::pow(Lambda / std::sinh(c * s), mp.rho);
        const double tail = env * std::pow(1.0 / (s * Lambda), 10);
        for (int i = 1; i <= samples; ++i) {
            const double r_in = c * s + (C - c) * s * (i - 0.5) / samples;
            fit.c_K = std::max(fit.c_K, std::abs(multiplier_kernel_at(K, r_in, mp)) / env);
            const double r_tail = c * s * (i - 0.5) / samples;
            fit.c_tail = std::max(fit.c_tail, std::abs(multiplier_kernel_at(K, r_tail, mp)) / tail);
            const double r_out = C * s * (1.0 + 0.5 * i / samples);
            fit.outside = std::max(fit.outside, std::abs(multiplier_kernel_at(K, r_out, mp)));
        }
    }
    return fit;
}

double smoothing_bump_ratio(double lambda0, double p, int d, double r_max) {
    if (!(lambda0 >= 8.0)) throw DomainError("smoothing_bump_ratio: λ₀ must be at least 8");
    const ModelParams mp(d);
    const auto lg = make_band_grid(lambda0 - 8.0, lambda0 + 8.0, 16, 16);
    const auto ft = SpectralFunction::sample(lg, mp, [lambda0](double l) { return std::exp(-(l - lambda0) * (l - lambda0)); });
    double l2 = 0.0;
    for (std::size_t j = 0; j < lg.size(); ++j)
        l2 += lg.weights[j] * std::norm(ft.values[j]) * plancherel_density(lg.nodes[j], mp);
    l2 = std::sqrt(inversion_constant(mp) * l2);
    const double per_unit = std::max(16.0, 1.5 * 12.0 * (lambda0 + 8.0) / (2.0 * kPi));
    const auto rg = make_radial_grid(r_max, static_cast<int>(std::ceil(r_max * per_unit / 16.0)), 16);
    return smoothing_functional(ft, SmoothingExponent(p, d), rg) / l2;
}

TransformIdentityErrors transform_identity_errors(int d, double width) {
    const ModelParams mp(d);
    const auto rg = make_radial_grid(8.0 * width, 32, 16);
    const auto lg = make_spectral_grid(24.0 / width, 48, 16);
    const double w2 = width * width;
    const auto f = RadialFunction::sample(rg, mp, [w2](double r) { return std::exp(-r * r / w2); });
    const auto ft = forward_radial_ft(f, lg);
    TransformIdentityErrors e;

    double space = 0.0, spec = 0.0;
    for (std::size_t i = 0; i < rg.size(); ++i)
        space += mp.omega_sphere * rg.weights[i] * std::norm(f.values[i]) * std::exp(2.0 * mp.rho * log_sinh(rg.nodes[i]));
    for (std::size_t j = 0; j < lg.size(); ++j)
        spec += inversion_constant(mp) * lg.weights[j] * std::norm(ft.values[j]) * plancherel_density(lg.nodes[j], mp);
    e.plancherel = std::abs(spec / space - 1.0);

    const auto back = inverse_radial_ft(ft, rg);
    double diff = 0.0, top = 0.0;
    for (std::size_t i = 0; i < rg.size(); ++i) {
        diff = std::max(diff, std::abs(back.values[i] - f.values[i]));
        top = std::max(top, std::abs(f.values[i]));
    }
    e.round_trip = diff / top;

    auto kernel = [w2](double r) -> complex { return std::exp(-2.0 * r * r / w2); };
    const auto conv = radial_convolution(f, kernel);
    const auto cft = forward_radial_ft(conv, lg);
    const auto kft = forward_radial_ft(RadialFunction::sample(rg, mp, kernel), lg);
    diff = top = 0.0;
    for (std::size_t j = 0; j < lg.size(); ++j) {
        diff = std::max(diff, std::abs(cft.values[j] - ft.values[j] * kft.values[j]));
        top = std::max(top, std::abs(cft.values[j]));
    }
    e.convolution = diff / top;
    return e;
}

double kernel_calibration_error(int d) {
    const ModelParams mp(d);
    const auto rg = make_radial_grid(6.0, 12, 16);
    const auto lg = make_spectral_grid(16.0, 32, 16);
    const auto inv = inverse_radial_ft(SpectralFunction::sample(lg, mp, [](double l) { return std::exp(-l * l); }), rg);
    MultiplierSymbol m;
    m.eval = [](double l) -> complex { return std::exp(-l * l); };
    m.hat = [](const KernelJet& r) { return exp(-0.25 * r * r) / std::sqrt(2.0); };
    m.hat_support = 30.0;
    m.frequency = 2.0;
    m.label = "gaussian";
    const auto K = multiplier_kernel(m, rg, mp);
    double diff = 0.0, top = 0.0;
    for (std::size_t i = 0; i < rg.size(); ++i) {
        diff = std::max(diff, std::abs(K.values[i] - inv.values[i]));
        top = std::max(top, std::abs(inv.values[i]));
    }
    return diff / top;
}

double adjointness_error_d2(double lambda) {
    const ModelParams mp(2);
    const auto rg = make_radial_grid(2.5, 10, 16);
    constexpr int n_theta = 256;
    const auto f = PolarFunction::sample(rg, n_theta, [](double r, double th) -> complex {
        return std::exp(-r * r) * complex(1.0 + 0.5 * r * std::cos(th), 0.3 * r * r * std::sin(2.0 * th));
    });
    const auto sphere = make_sphere_grid(2, 2048);
    const auto g = SphereFunction::sample(sphere, [](std::span<const double> w) -> complex {
        return complex(1.0 + 0.3 * w[1], 0.2 * w[0] * w[1]);
    });

    const auto Rf = restriction_operator_d2(lambda, f, sphere);
    complex lhs = 0.0;
    for (std::size_t i = 0; i < sphere.size(); ++i) lhs += sphere.weights[i] * Rf.values[i] * std::conj(g.values[i]);
    lhs /= mp.omega_sphere;

    std::vector<AmbientPoint> pts;
    pts.reserve(rg.size() * n_theta);
    for (std::size_t i = 0; i < rg.size(); ++i)
        for (int j = 0; j < n_theta; ++j) {
            const double th = f.theta(j);
            pts.push_back(polar_to_ambient({rg.nodes[i], {std::cos(th), std::sin(th)}}, mp));
        }
    const auto Eg = extension_operator(lambda, g, std::span<const AmbientPoint>(pts));
    complex rhs = 0.0;
    const double dth = 2.0 * kPi / n_theta;
    for (std::size_t i = 0; i < rg.size(); ++i)
        for (int j = 0; j < n_theta; ++j) {
            const std::size_t k = i * n_theta + j;
            rhs += rg.weights[i] * std::sinh(rg.nodes[i]) * dth * f.values[k] * std::conj(Eg[k]);
        }
    return std::abs(lhs - rhs) / std::abs(rhs);
}

}  // namespace hyperbolic

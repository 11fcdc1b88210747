// Runs the ten acceptance criteria and prints one PASS/FAIL line for each.
#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <limits>
#include <numbers>
#include <optional>
#include <random>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

#include <hyperbolic/operators.hpp>
#include <hyperbolic/specfun.hpp>
#include <hyperbolic/transform.hpp>
#include <hyperbolic/verify.hpp>
#include <hypx/commands.hpp>

using namespace hyperbolic;
constexpr double pi = std::numbers::pi;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;

    void require(bool ok, const std::string& what) {
        if (!ok) pass = false;
        if (!detail.empty()) detail += "; ";
        detail += what + (ok ? "" : " [violated]");
    }
};

std::string fmt(const char* f, double a) {
    char buf[96];
    std::snprintf(buf, sizeof buf, f, a);
    return buf;
}

std::string fmt(const char* f, double a, double b) {
    char buf[128];
    std::snprintf(buf, sizeof buf, f, a, b);
    return buf;
}

double slope_of(const std::vector<double>& x, const std::vector<double>& y) {
    std::vector<std::pair<double, double>> pts;
    for (std::size_t i = 0; i < x.size(); ++i) pts.emplace_back(x[i], y[i]);
    return fit_scaling_exponent(pts).slope;
}

double spread(const std::vector<double>& v) {
    return *std::max_element(v.begin(), v.end()) / *std::min_element(v.begin(), v.end());
}

const std::vector<double> kLambdas{8, 16, 32, 64};

Outcome criterion1() {
    Outcome o;
    const ModelParams m3(3), m2(2);
    double worst = 0.0;
    for (int i = 0; i <= 24; ++i) {
        const double l = std::pow(64.0, i / 24.0);
        for (int j = 0; j <= 30; ++j) {
            const double r = 0.01 * std::pow(1000.0, j / 30.0);
            const double exact = std::sin(l * r) / (l * std::sinh(r));
            worst = std::max(worst, std::abs(spherical_fn(l, r, m3).value.real() - exact));
        }
    }
    o.require(worst <= 1e-10, fmt("max |Φ − sin(λr)/(λ sh r)| = %.2e", worst));
    double dens = 0.0;
    for (int i = 0; i <= 60; ++i) {
        const double l = 0.01 * std::pow(1e5, i / 60.0);
        dens = std::max(dens, std::abs(plancherel_density(l, m3) / (l * l) - 1.0));
        dens = std::max(dens, std::abs(plancherel_density(l, m2) / (pi * l * std::tanh(pi * l)) - 1.0));
    }
    o.require(dens <= 1e-10, fmt("max relative density error = %.2e", dens));
    return o;
}

Outcome criterion2() {
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    for (int d : {2, 3}) {
        const auto e = transform_identity_errors(d);
        o.require(e.plancherel <= 1e-6 && e.round_trip <= 1e-6 && e.convolution <= 1e-6,
                  "d=" + std::to_string(d) + fmt(": plancherel %.1e, round trip %.1e", e.plancherel, e.round_trip) +
                      fmt(", convolution %.1e", e.convolution));
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    o.require(secs <= 60.0, fmt("runtime %.1f s", secs));
    return o;
}

Outcome criterion3() {
    Outcome o;
    o.require(kOddKernelCalibration == 1.0 && kEvenKernelCalibration == 1.0, "calibration constants 1 (odd), 1 (even)");
    for (int d : {2, 3, 4, 5}) {
        const double e = kernel_calibration_error(d);
        o.require(e <= 1e-6, "d=" + std::to_string(d) + fmt(" kernel vs inverse transform %.1e", e));
    }
    for (int d : {2, 3}) {
        std::vector<double> cj, ck, ct;
        double outside = 0.0;
        for (double L : {8.0, 16.0, 32.0}) {
            const auto f = fit_dyadic_kernel_bounds(L, d);
            cj.push_back(f.c_J);
            ck.push_back(f.c_K);
            if (f.c_tail > 0.0) ct.push_back(f.c_tail);
            outside = std::max(outside, f.outside);
        }
        const double tail = ct.empty() ? 1.0 : spread(ct);
        o.require(spread(cj) <= 2.0 && spread(ck) <= 2.0 && tail <= 2.0,
                  "d=" + std::to_string(d) + fmt(" spread C_J %.3f, C_K %.3f", spread(cj), spread(ck)) +
                      fmt(", C_tail %.3f (outside support %.1e)", tail, outside));
    }
    return o;
}

Outcome criterion4() {
    Outcome o;
    for (int d : {2, 3}) {
        const ModelParams mp(d);
        const double crit = 2.0 * d / (d - 1.0);
        const double rho = 0.5 * (d - 1);
        for (double p : {(2.0 + crit) / 2.0, 2.0 * crit}) {
            std::vector<double> v;
            for (double l : kLambdas) v.push_back(spherical_lp_norm(l, p, mp).value);
            const double predicted = p > crit ? -d / p : -rho;
            const double s = slope_of(kLambdas, v);
            o.require(std::abs(s - predicted) <= 0.1,
                      "d=" + std::to_string(d) + fmt(" p=%g slope %.4f", p, s) + fmt(" (predicted %.4f)", predicted));
        }
        bool divergent = true;
        for (double l : kLambdas) divergent = divergent && spherical_lp_norm(l, 2.0, mp).divergent;
        o.require(divergent, "d=" + std::to_string(d) + " p=2 divergent");
    }
    return o;
}

Outcome criterion5() {
    Outcome o;
    const ModelParams mp(2);
    for (double p : {4.0, 6.0}) {
        std::vector<double> v;
        for (double l : kLambdas) v.push_back(knapp_extension_ratio(l, p, mp));
        const double predicted = 0.5 * mp.rho - mp.rho / p;
        const double s = slope_of(kLambdas, v);
        o.require(std::abs(s - predicted) <= 0.15, fmt("p=%g slope %.4f", p, s) + fmt(" (predicted %.4f)", predicted));
    }
    std::vector<double> c;
    for (double l : {16.0, 32.0, 64.0}) c.push_back(knapp_pointwise_constant(l, mp));
    const double lo = *std::min_element(c.begin(), c.end());
    o.require(lo > 0.0 && spread(c) <= 2.0, fmt("pointwise constant in [%.4f, %.4f]", lo, lo * spread(c)));
    return o;
}

Outcome criterion6() {
    Outcome o;
    for (int d : {2, 3}) {
        const double pst = p_stein_tomas(d);
        for (double p : {3.0, 4.0, 6.0, 8.0}) {
            if (p == pst) continue;
            const auto fam = p > pst ? ProjectorFamily::Radial : ProjectorFamily::Knapp;
            const auto r = run_projector_scaling(fam, p, d, kLambdas);
            const double predicted = p > pst ? d - 1 - 2.0 * d / p : (d - 1) * (0.5 - 1.0 / p);
            o.require(std::abs(r.fit.slope - predicted) <= 0.15,
                      "d=" + std::to_string(d) + (p > pst ? " radial" : " knapp") + fmt(" p=%g slope %.4f", p, r.fit.slope) +
                          fmt(" (predicted %.4f)", predicted));
        }
        const double upper = d - 1 - 2.0 * d / pst, lower = (d - 1) * (0.5 - 1.0 / pst);
        const double jump = std::max({std::abs(upper - lower), std::abs(predicted_alpha(pst, d) - lower),
                                      std::abs(predicted_alpha(std::nextafter(pst, INFINITY), d) - lower)});
        o.require(jump <= 1e-12, "d=" + std::to_string(d) + fmt(" alpha continuity at p_ST %.1e", jump));
    }
    return o;
}

Outcome criterion7() {
    Outcome o;
    const auto r = run_smallfreq_check(3, {1.0 / 16, 1.0 / 8, 1.0 / 4, 1.0 / 2}, 4.0);
    o.require(std::abs(r.fit.slope - 2.0) <= 0.15, fmt("d=3 slope %.4f (predicted 2)", r.fit.slope));
    return o;
}

// Exponents of τ (resolvents) or Λ (projector remark) as stated in the
// resolvent estimates, for a point of the upper half x + y > 1 off every boundary.
struct Bullet {
    Region region;
    double exponent;
};

std::optional<Bullet> bullet(double x, double y, int d, Diagram dg) {
    const double rho = 0.5 * (d - 1);
    const double sp = 1.0 / (1.0 - x);          // s′
    const bool small_q = y > (d - 1.0) / (2.0 * d);  // q < 2d/(d−1)
    const bool beyond = 2.0 * sp * y >= p_stein_tomas(d);  // 2s′/q ≥ p_ST
    Region r = small_q ? (beyond ? Region::IV : Region::I) : (beyond ? Region::III : Region::II);
    double e = 0.0;
    switch (dg) {
        case Diagram::Resolvent:
            e = r == Region::I     ? 0.5 * rho * (x - y) - 0.5
                : r == Region::II  ? 0.5 * rho * (x - y) + 0.5 * d * (0.5 - y) - 0.75
                : r == Region::III ? 0.5 * d * (x - y) - 1.0
                                   : 0.5 * d * (x - 0.5) - 0.75;
            break;
        case Diagram::DResolvent:
            if (r == Region::III) return std::nullopt;
            e = r == Region::I    ? 0.5 * rho * (x - y)
                : r == Region::II ? 0.5 * rho * (x - y) + 0.5 * d * (0.5 - y) - 0.25
                                  : 0.5 * d * (x - 0.5) - 0.25;
            break;
        case Diagram::ProjectorRemark:
            e = r == Region::I     ? rho * (x - y)
                : r == Region::II  ? rho * (x - y) + d * (0.5 - y) - 0.5
                : r == Region::III ? d * (x - y) - 1.0
                                   : d * (x - 0.5) - 0.5;
            break;
    }
    return Bullet{r, e};
}

// Duality-line statements, p = 1/y.
std::optional<double> duality_bullet(double p, int d, Diagram dg) {
    if (dg == Diagram::DResolvent) {
        if (p > 2.0 * d / (d - 1.0)) return std::nullopt;
        return 0.5 * (d - 1) * (0.5 - 1.0 / p);
    }
    if (dg == Diagram::ProjectorRemark) return predicted_alpha(p, d);
    if (p <= p_stein_tomas(d)) return 0.5 * (d - 1) * (0.5 - 1.0 / p) - 0.5;
    return 0.5 * d * (1.0 - 2.0 / p) - 1.0;
}

double green_of(int d, Diagram dg) {
    return dg == Diagram::Resolvent ? 2.0 / d : dg == Diagram::DResolvent ? 1.0 / d : INFINITY;
}

std::vector<std::array<double, 4>> svg_lines(const std::string& svg, const std::string& cls, const std::string& eq) {
    static const std::regex rect_re(R"re(<rect x="([\d.]+)" y="([\d.]+)" width="([\d.]+)")re");
    std::smatch m;
    if (!std::regex_search(svg, m, rect_re)) return {};
    const double fx = std::stod(m[1]), fy = std::stod(m[2]), side = std::stod(m[3]);
    const std::regex line_re("<line class=\"" + cls + "\" data-eq=\"" + std::regex_replace(eq, std::regex(R"([()/+*-])"), R"(\$&)") +
                             R"re(" x1="([\d.]+)" y1="([\d.]+)" x2="([\d.]+)" y2="([\d.]+)")re");
    std::vector<std::array<double, 4>> out;
    for (std::sregex_iterator it(svg.begin(), svg.end(), line_re), end; it != end; ++it) {
        const auto& g = *it;
        out.push_back({(std::stod(g[1]) - fx) / side, (fy + side - std::stod(g[2])) / side, (std::stod(g[3]) - fx) / side,
                       (fy + side - std::stod(g[4])) / side});
    }
    return out;
}

Outcome criterion8() {
    Outcome o;
    // symbols
    std::mt19937_64 rng(2024);
    std::uniform_real_distribution<double> ul(0.0, 40.0), ut(1.0, 1000.0), ue(1e-3, 1.0);
    double sym = 0.0;
    for (int i = 0; i < 2000; ++i) {
        const ResolventParams rp(ut(rng), ue(rng));
        const double l = ul(rng);
        const complex exact = 1.0 / (l * l - rp.z());
        const complex split(resolvent_real_part(l, rp), resolvent_imag_part(l, rp));
        sym = std::max({sym, std::abs(resolvent_symbol(rp)(l) - exact) / std::abs(exact), std::abs(split - exact) / std::abs(exact),
                        std::abs(dresolvent_symbol(rp)(l) - l * exact) / std::max(std::abs(l * exact), 1e-300)});
    }
    o.require(sym <= 4 * std::numeric_limits<double>::epsilon(), fmt("symbol identities %.1e", sym));

    // regions against an independent case analysis
    int checked = 0, mismatched = 0;
    double dual = 0.0;
    const std::pair<Diagram, const char*> diagrams[] = {
        {Diagram::Resolvent, "resolvent"}, {Diagram::DResolvent, "dresolvent"}, {Diagram::ProjectorRemark, "projector"}};
    for (int d : {2, 3})
        for (const auto& [dg, name] : diagrams) {
            const double yellow = (d - 1.0) / (2.0 * d), k = (d - 1.0) / (d + 1.0), green = green_of(d, dg);
            for (int i = 0; i <= 20; ++i)
                for (int j = 0; j <= 20; ++j) {
                    const double x = i / 20.0, y = j / 20.0;
                    const auto pt = classify_region(x, y, d, dg);
                    const auto mirror = classify_region(1.0 - y, 1.0 - x, d, dg);
                    if (pt.region != mirror.region) dual = INFINITY;
                    else if (pt.region != Region::Outside) dual = std::max(dual, std::abs(pt.exponent - mirror.exponent));

                    const bool inside = x >= 0.5 && y <= 0.5 && !(x == 0.5 && y == 0.5) && x - y <= green + 1e-12;
                    if (!inside) {
                        if (pt.region != Region::Outside) ++mismatched;
                        ++checked;
                        continue;
                    }
                    if (std::abs(x + y - 1.0) < 1e-12) {
                        const auto e = duality_bullet(1.0 / y, d, dg);
                        ++checked;
                        if (!e ? pt.region != Region::Outside : std::abs(pt.exponent - *e) > 1e-12) ++mismatched;
                        continue;
                    }
                    const double ux = x + y > 1.0 ? x : 1.0 - y, uy = x + y > 1.0 ? y : 1.0 - x;
                    const bool tie = std::abs(uy - yellow) < 1e-9 || std::abs(ux + k * uy - 1.0) < 1e-9 ||
                                     std::abs(ux - uy - green) < 1e-9;
                    if (tie) continue;
                    const auto b = bullet(ux, uy, d, dg);
                    ++checked;
                    if (!b) {
                        if (pt.region != Region::Outside) ++mismatched;
                    } else if (pt.region != b->region || std::abs(pt.exponent - b->exponent) > 1e-12) {
                        ++mismatched;
                    }
                }
        }
    o.require(mismatched == 0, std::to_string(checked) + " grid points against the case analysis, " + std::to_string(mismatched) + " mismatches");
    o.require(dual <= 1e-14, fmt("duality symmetry %.1e", dual));

    // caption lines
    const auto dir = std::filesystem::temp_directory_path() / "hyperbolic_acceptance";
    std::filesystem::create_directories(dir);
    int lines_ok = 0, lines_total = 0;
    for (int d : {2, 3})
        for (const char* diagram : {"resolvent", "dresolvent"}) {
            const auto csv = dir / "diagram.csv", svg = dir / "diagram.svg";
            std::ofstream(csv) << "d,diagram\n" << d << "," << diagram << "\n";
            hypx::cmd_plot(csv.string(), hypx::PlotKind::RegionDiagram, svg.string());
            std::stringstream ss;
            ss << std::ifstream(svg).rdbuf();
            const std::string text = ss.str();
            const double k = (d - 1.0) / (d + 1.0), g = std::string(diagram) == "resolvent" ? 2.0 / d : 1.0 / d;
            struct Want {
                const char* cls;
                std::string eq;
                std::function<double(double, double)> residual;
            };
            const Want wants[] = {
                {"yellow", "1/q=(d-1)/(2d)", [&](double, double y) { return y - (d - 1.0) / (2.0 * d); }},
                {"green", std::string("1/s-1/q=") + (g == 2.0 / d ? "2/d" : "1/d"), [&](double x, double y) { return x - y - g; }},
                {"purple", "(d-1)/(d+1)/q+1/s=1", [&](double x, double y) { return k * y + x - 1.0; }},
                {"yellow", "1/s=(d+1)/(2d)", [&](double x, double) { return x - (d + 1.0) / (2.0 * d); }},
                {"purple", "(d-1)/(d+1)/s+1/q=(d-1)/(d+1)", [&](double x, double y) { return k * x + y - k; }},
            };
            for (const auto& w : wants) {
                // a green line with g >= 1 meets the unit square in a single corner
                if (std::string(w.cls) == "green" && g >= 1.0) continue;
                ++lines_total;
                const auto segs = svg_lines(text, w.cls, w.eq);
                bool ok = !segs.empty();
                for (const auto& s : segs)
                    ok = ok && std::abs(w.residual(s[0], s[1])) < 1e-4 && std::abs(w.residual(s[2], s[3])) < 1e-4 &&
                         std::hypot(s[2] - s[0], s[3] - s[1]) > 1e-3;
                lines_ok += ok;
            }
        }
    o.require(lines_ok == lines_total, std::to_string(lines_ok) + "/" + std::to_string(lines_total) + " caption lines in the SVGs");
    return o;
}

Outcome criterion9() {
    Outcome o;
    double worst = 0.0;
    for (double t : {0.25, 0.5, 1.0})
        for (double l : {2.0, 5.0}) worst = std::max(worst, boost_covariance_error(t, l));
    o.require(worst <= 1e-4, fmt("boost covariance error %.1e", worst));
    std::vector<double> den;
    for (double t : {0.0, 0.25, 0.5, 1.0, 2.0, 4.0}) den.push_back(boost_denominator(t, 1.5));
    bool decreasing = true;
    for (std::size_t i = 1; i < den.size(); ++i) decreasing = decreasing && den[i] < den[i - 1];
    o.require(decreasing, fmt("p=1.5 denominator %.4f -> %.4f over t in [0, 4]", den.front(), den.back()));
    return o;
}

Outcome criterion10() {
    Outcome o;
    std::vector<double> r;
    for (double l : kLambdas) r.push_back(smoothing_bump_ratio(l, 3.0, 3));
    o.require(spread(r) < 2.0, fmt("d=3 p=3 ratio in [%.4f, %.4f]", *std::min_element(r.begin(), r.end()),
                                   *std::max_element(r.begin(), r.end())));
    const auto lg = make_spectral_grid(4.0, 64, 16);
    std::vector<complex> a(lg.size());
    double closed = 0.0;
    for (std::size_t j = 0; j < lg.size(); ++j) {
        const double l = lg.nodes[j];
        a[j] = std::exp(-4.0 * (l - 2.0) * (l - 2.0)) * complex(1.0, 0.5 * l);
        closed += lg.weights[j] * std::norm(a[j]) * smoothing_time_weight(l);
    }
    const double rel = std::abs(time_l2_bruteforce(lg, a, 10.0, 2001) / closed - 1.0);
    o.require(rel <= 1e-4, fmt("time weight vs brute force %.1e", rel));
    return o;
}

}  // namespace

int main() {
    const std::pair<const char*, std::function<Outcome()>> criteria[] = {
        {"special-function oracles", criterion1}, {"transform identities", criterion2},
        {"kernel formulas", criterion3},          {"radial example", criterion4},
        {"Knapp example", criterion5},            {"projector sharpness", criterion6},
        {"small frequencies", criterion7},        {"resolvent regions", criterion8},
        {"boost covariance", criterion9},         {"smoothing functional", criterion10},
    };
    int failed = 0, n = 0;
    const auto start = std::chrono::steady_clock::now();
    for (const auto& [name, run] : criteria) {
        ++n;
        const auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = run();
        } catch (const std::exception& e) {
            o.pass = false;
            o.detail = std::string("error: ") + e.what();
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        failed += !o.pass;
        std::printf("%s criterion %d: %s (%.1f s): %s\n", o.pass ? "PASS" : "FAIL", n, name, secs, o.detail.c_str());
        std::fflush(stdout);
    }
    const double total = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%d/%d criteria passed in %.1f s\n", n - failed, n, total);
    return failed == 0 ? 0 : 1;
}

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <random>
#include <stdexcept>

#include <hyperbolic/specfun.hpp>
#include <hyperbolic/verify.hpp>

#include "hypx/commands.hpp"

namespace hypx {

namespace hb = hyperbolic;
using nlohmann::json;

namespace {

class Runner {
public:
    explicit Runner(const RunConfig& cfg) : cfg_(cfg) {}

    // Runs `body`, which appends records; an exception becomes a failed record named `id`.
    void run(const std::string& id, json params, const std::function<void(std::vector<ResultRecord>&)>& body) {
        const auto t0 = std::chrono::steady_clock::now();
        std::vector<ResultRecord> out;
        try {
            body(out);
        } catch (const std::exception& e) {
            ResultRecord r;
            r.id = id;
            r.params = std::move(params);
            r.predicted = r.measured = r.residual = NAN;
            r.error = e.what();
            out.push_back(std::move(r));
        }
        const double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        for (auto& r : out) {
            r.wall_time_s = cfg_.timing ? dt / out.size() : 0.0;
            records_.push_back(std::move(r));
        }
    }

    std::vector<ResultRecord> take() {
        std::sort(records_.begin(), records_.end(), [](const auto& a, const auto& b) { return a.id < b.id; });
        return std::move(records_);
    }

private:
    const RunConfig& cfg_;
    std::vector<ResultRecord> records_;
};

std::string tag(const std::string& base, int d) { return base + "/d=" + std::to_string(d); }

std::string num(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%g", x);
    return buf;
}

hb::ExperimentOptions options(const RunConfig& cfg) {
    hb::ExperimentOptions o;
    o.r_max = cfg.r_max;
    o.s_nodes = cfg.s_nodes;
    o.v_nodes = cfg.v_nodes;
    o.cap_nodes = cfg.cap_nodes;
    return o;
}

ResultRecord from_scaling(std::string id, json params, const hb::ScalingResult& r, double tol) {
    params["alpha"] = r.alpha;
    params["fit_max_residual"] = r.fit.max_residual;
    return make_record(std::move(id), std::move(params), r.predicted, r.fit.slope, tol);
}

void projector_suite(Runner& run, const RunConfig& cfg) {
    const auto opt = options(cfg);
    for (int d : cfg.dims)
        for (double p : cfg.p)
            for (auto fam : {hb::ProjectorFamily::Radial, hb::ProjectorFamily::Knapp}) {
                const std::string name = fam == hb::ProjectorFamily::Radial ? "radial" : "knapp";
                const std::string id = tag("projector/" + name, d) + "/p=" + num(p);
                const json params{{"family", name}, {"d", d}, {"p", p}, {"lambdas", cfg.lambdas}};
                run.run(id, params, [&](auto& out) {
                    out.push_back(from_scaling(id, params, hb::run_projector_scaling(fam, p, d, cfg.lambdas, opt),
                                               cfg.tolerance));
                });
            }
}

void smallfreq_suite(Runner& run, const RunConfig& cfg) {
    const auto opt = options(cfg);
    for (int d : cfg.dims) {
        const std::string id = tag("smallfreq", d) + "/p=4";
        const json params{{"d", d}, {"p", 4}, {"Lambdas", cfg.small_lambdas}};
        run.run(id, params, [&](auto& out) {
            out.push_back(from_scaling(id, params, hb::run_smallfreq_check(d, cfg.small_lambdas, 4.0, opt), cfg.tolerance));
        });
    }
}

void extension_suite(Runner& run, const RunConfig& cfg) {
    const auto opt = options(cfg);
    for (int d : cfg.dims) {
        if (d > 3) continue;
        for (double q : cfg.q) {
            const std::string base = tag("extension", d) + "/p=2/q=" + num(q);
            const json params{{"d", d}, {"p", 2}, {"q", q}, {"lambdas", cfg.lambdas}};
            run.run(base, params, [&](auto& out) {
                const auto e = hb::run_extension_lower_bounds(2.0, q, d, cfg.lambdas, opt);
                if (e.divergent) {
                    out.push_back(make_record(base + "/constant", params, 0.0, INFINITY, cfg.tolerance));
                } else {
                    out.push_back(from_scaling(base + "/constant", params, e.constant_family, cfg.tolerance));
                }
                if (q > 2.0) out.push_back(from_scaling(base + "/cap", params, e.cap_family, cfg.tolerance));
            });
        }
        const std::string id = tag("extension/divergence", d) + "/q=2";
        run.run(id, {{"d", d}, {"q", 2}}, [&](auto& out) {
            const auto n = hb::spherical_lp_norm(cfg.lambdas.front(), 2.0, hb::ModelParams(d), cfg.r_max);
            out.push_back(make_record(id, {{"d", d}, {"q", 2}, {"tail_exponent", n.tail_exponent}}, 1.0,
                                      n.divergent ? 1.0 : 0.0, 0.5));
        });
    }
    if (std::find(cfg.dims.begin(), cfg.dims.end(), 2) == cfg.dims.end()) return;
    for (double t : {0.25, 0.5, 1.0}) {
        const std::string id = "extension/boost-covariance/d=2/t=" + num(t);
        run.run(id, {{"t", t}, {"lambda", 2.0}}, [&](auto& out) {
            out.push_back(make_record(id, {{"t", t}, {"lambda", 2.0}}, 0.0, hb::boost_covariance_error(t, 2.0), 1e-4));
        });
    }
    run.run("extension/boost-denominator/d=2/p=1.5", {}, [&](auto& out) {
        const std::vector<double> ts{0.0, 0.25, 0.5, 1.0, 2.0};
        std::vector<double> v;
        for (double t : ts) v.push_back(hb::boost_denominator(t, 1.5));
        int increases = 0;
        for (std::size_t i = 1; i < v.size(); ++i) increases += v[i] >= v[i - 1];
        out.push_back(make_record("extension/boost-denominator/d=2/p=1.5", {{"t", ts}, {"values", v}}, 0.0, increases, 0.5));
    });
}

double symbol_identity_residual() {
    double worst = 0.0;
    for (double tau : {4.0, 64.0, 1024.0})
        for (double eps : {1e-3, 1.0}) {
            const hb::ResolventParams rp(tau, eps);
            const auto R = hb::resolvent_symbol(rp);
            const auto D = hb::dresolvent_symbol(rp);
            for (int i = 0; i <= 400; ++i) {
                const double l = 0.125 * i;
                const hb::complex exact = 1.0 / (l * l - rp.z());
                const hb::complex split(hb::resolvent_real_part(l, rp), hb::resolvent_imag_part(l, rp));
                const double scale = std::abs(exact);
                worst = std::max({worst, std::abs(R(l) - exact) / scale, std::abs(split - exact) / scale,
                                  std::abs(D(l) - l * exact) / std::max(scale * l, 1e-300)});
            }
        }
    return worst;
}

void resolvent_suite(Runner& run, const RunConfig& cfg) {
    run.run("resolvent/symbol-identities", {}, [&](auto& out) {
        out.push_back(make_record("resolvent/symbol-identities", {{"tau", {4, 64, 1024}}, {"eps", {1e-3, 1}}}, 0.0,
                                  symbol_identity_residual(), 1e-14));
    });
    const std::pair<hb::Diagram, const char*> diagrams[] = {{hb::Diagram::Resolvent, "resolvent"},
                                                             {hb::Diagram::DResolvent, "dresolvent"},
                                                             {hb::Diagram::ProjectorRemark, "projector-remark"}};
    for (int d : cfg.dims)
        for (const auto& [dg, name] : diagrams) {
            const std::string base = tag(std::string("resolvent/regions/") + name, d);
            run.run(base, {{"d", d}}, [&, dg = dg](auto& out) {
                double sym = 0.0, formula = 0.0;
                int classified = 0;
                for (int i = 0; i <= 20; ++i)
                    for (int j = 0; j <= 20; ++j) {
                        const double x = i / 20.0, y = j / 20.0;
                        const auto a = hb::classify_region(x, y, d, dg);
                        const auto b = hb::classify_region((20 - j) / 20.0, (20 - i) / 20.0, d, dg);
                        if (a.region != b.region) sym = INFINITY;
                        if (a.region == hb::Region::Outside) continue;
                        ++classified;
                        sym = std::max(sym, std::abs(a.exponent - b.exponent));
                        // upper-half representative of the point
                        const bool upper = x + y >= 1.0;
                        const double ux = upper ? x : 1.0 - y, uy = upper ? y : 1.0 - x;
                        if (a.on_boundary) continue;
                        formula = std::max(formula, std::abs(a.exponent - hb::region_exponent(a.region, ux, uy, d, dg)));
                    }
                const json params{{"d", d}, {"grid", "21x21"}, {"classified", classified}};
                out.push_back(make_record(base + "/duality-symmetry", params, 0.0, sym, 1e-12));
                out.push_back(make_record(base + "/bullet-formulas", params, 0.0, formula, 1e-12));
            });
        }
    for (int d : cfg.dims)
        for (double q : cfg.q) {
            if (!(q > 2.0)) continue;
            const std::string id = tag("resolvent/offduality-reduction", d) + "/q=" + num(q);
            run.run(id, {{"d", d}, {"q", q}}, [&](auto& out) {
                const double qp = q / (q - 1.0);
                out.push_back(make_record(id, {{"d", d}, {"q", q}}, hb::predicted_alpha(q, d),
                                          hb::predicted_offduality_projector(qp, q, d).exponent, 1e-12));
            });
        }
}

void smoothing_suite(Runner& run, const RunConfig& cfg) {
    run.run("smoothing/time-weight", {}, [&](auto& out) {
        const auto lg = hb::make_spectral_grid(4.0, 64, 16);
        std::vector<hb::complex> a(lg.size());
        double closed = 0.0;
        for (std::size_t j = 0; j < lg.size(); ++j) {
            const double l = lg.nodes[j];
            a[j] = std::exp(-std::pow((l - 2.0) / 0.3, 2)) * hb::complex(1.0, 0.5 * l);
            closed += lg.weights[j] * std::norm(a[j]) * hb::smoothing_time_weight(l);
        }
        const double brute = hb::time_l2_bruteforce(lg, a, 10.0, 2001);
        out.push_back(make_record("smoothing/time-weight", {{"T", 10}, {"nt", 2001}}, 0.0,
                                  std::abs(brute - closed) / closed, 1e-4));
    });
    for (int d : cfg.dims) {
        if (d > 3) continue;
        const std::string base = tag("smoothing/bump-ratio", d) + "/p=3";
        std::vector<double> ls;
        for (double l : cfg.lambdas)
            if (l >= 8.0) ls.push_back(l);
        run.run(base, {{"d", d}, {"p", 3}}, [&](auto& out) {
            std::vector<std::pair<double, double>> pts;
            for (double l : ls) pts.emplace_back(l, hb::smoothing_bump_ratio(l, 3.0, d));
            double lo = INFINITY, hi = 0.0;
            for (const auto& [l, v] : pts) lo = std::min(lo, v), hi = std::max(hi, v);
            const json params{{"d", d}, {"p", 3}, {"lambdas", ls}};
            out.push_back(make_record(base + "/slope", params, 0.0, hb::fit_scaling_exponent(pts).slope, cfg.tolerance));
            // bounded: max/min within a factor 2
            out.push_back(make_record(base + "/variation", params, 1.0, hi / lo, 1.0));
        });
    }
}

void kernels_suite(Runner& run, const RunConfig& cfg) {
    for (int d : cfg.dims) {
        if (d > 6) continue;
        const std::string id = tag("kernels/calibration", d);
        run.run(id, {{"d", d}}, [&](auto& out) {
            out.push_back(make_record(id, {{"d", d}, {"symbol", "exp(-l^2)"}}, 0.0, hb::kernel_calibration_error(d), 1e-6));
        });
    }
    for (int d : cfg.dims) {
        if (d > 3) continue;
        const std::string base = tag("kernels/dyadic", d);
        run.run(base, {{"d", d}}, [&](auto& out) {
            std::vector<hb::DyadicBoundFit> fits;
            for (double L : {8.0, 16.0, 32.0}) fits.push_back(hb::fit_dyadic_kernel_bounds(L, d));
            auto spread = [&](double hb::DyadicBoundFit::*m) {
                double lo = INFINITY, hi = 0.0;
                for (const auto& f : fits) lo = std::min(lo, f.*m), hi = std::max(hi, f.*m);
                if (hi == 0.0) return 1.0;  // identically zero (odd d tails)
                return hi / lo;
            };
            json params{{"d", d}, {"Lambda", {8, 16, 32}}, {"c", 0.5}, {"C", 4.0}};
            for (const auto& f : fits) params["constants"].push_back({f.c_J, f.c_K, f.c_tail});
            out.push_back(make_record(base + "/J-stability", params, 1.0, spread(&hb::DyadicBoundFit::c_J), 1.0));
            out.push_back(make_record(base + "/K-stability", params, 1.0, spread(&hb::DyadicBoundFit::c_K), 1.0));
            out.push_back(make_record(base + "/tail-stability", params, 1.0, spread(&hb::DyadicBoundFit::c_tail), 1.0));
            double outside = 0.0;
            for (const auto& f : fits) outside = std::max(outside, f.outside);
            out.push_back(make_record(base + "/outside-support", params, 0.0, outside, 1e-12));
        });
    }
}

void identities_suite(Runner& run, const RunConfig& cfg) {
    std::mt19937_64 rng(cfg.seed);
    std::uniform_real_distribution<double> width(0.8, 1.25);
    for (int d : cfg.dims) {
        const double w = width(rng);
        const std::string base = tag("identities", d);
        const json params{{"d", d}, {"width", w}};
        run.run(base, params, [&](auto& out) {
            const auto e = hb::transform_identity_errors(d, w);
            out.push_back(make_record(base + "/plancherel", params, 0.0, e.plancherel, 1e-6));
            out.push_back(make_record(base + "/round-trip", params, 0.0, e.round_trip, 1e-6));
            out.push_back(make_record(base + "/convolution", params, 0.0, e.convolution, 1e-6));
        });
    }
    if (std::find(cfg.dims.begin(), cfg.dims.end(), 2) != cfg.dims.end()) {
        run.run("identities/d=2/adjointness", {{"lambda", 1.0}}, [&](auto& out) {
            out.push_back(make_record("identities/d=2/adjointness", {{"lambda", 1.0}}, 0.0, hb::adjointness_error_d2(1.0), 1e-6));
        });
    }
}

}  // namespace

ResultRecord make_record(std::string id, json params, double predicted, double measured, double tolerance) {
    ResultRecord r;
    r.id = std::move(id);
    r.params = std::move(params);
    r.predicted = predicted;
    r.measured = measured;
    r.residual = std::abs(measured - predicted);
    r.tolerance = tolerance;
    r.pass = r.residual <= tolerance;
    return r;
}

std::vector<ResultRecord> run_suite(Suite suite, const RunConfig& cfg) {
    validate(cfg);
    Runner run(cfg);
    const bool all = suite == Suite::All;
    if (all || suite == Suite::Identities) identities_suite(run, cfg);
    if (all || suite == Suite::Kernels) kernels_suite(run, cfg);
    if (all || suite == Suite::Projector) projector_suite(run, cfg);
    if (all || suite == Suite::SmallFreq) smallfreq_suite(run, cfg);
    if (all || suite == Suite::Extension) extension_suite(run, cfg);
    if (all || suite == Suite::Resolvent) resolvent_suite(run, cfg);
    if (all || suite == Suite::Smoothing) smoothing_suite(run, cfg);
    return run.take();
}

}  // namespace hypx

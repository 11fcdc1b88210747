#include "hypx/commands.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <hyperbolic/specfun.hpp>
#include <hyperbolic/transform.hpp>
#include <hyperbolic/verify.hpp>

namespace hypx {

namespace hb = hyperbolic;
using nlohmann::json;

std::string format_double(double x) {
    if (std::isnan(x)) return "nan";
    if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17e", x);
    return buf;
}

TableKind parse_table_kind(const std::string& s) {
    if (s == "c-function") return TableKind::CFunction;
    if (s == "phi") return TableKind::Phi;
    if (s == "kernel") return TableKind::Kernel;
    if (s == "exponents") return TableKind::Exponents;
    throw std::invalid_argument("unknown table kind '" + s + "'");
}

Suite parse_suite(const std::string& s) {
    static const std::pair<const char*, Suite> names[] = {
        {"all", Suite::All},           {"projector", Suite::Projector}, {"resolvent", Suite::Resolvent},
        {"extension", Suite::Extension}, {"smallfreq", Suite::SmallFreq}, {"smoothing", Suite::Smoothing},
        {"kernels", Suite::Kernels},   {"identities", Suite::Identities}};
    for (const auto& [n, v] : names)
        if (s == n) return v;
    throw std::invalid_argument("unknown suite '" + s + "'");
}

std::string to_string(Suite s) {
    switch (s) {
        case Suite::All: return "all";
        case Suite::Projector: return "projector";
        case Suite::Resolvent: return "resolvent";
        case Suite::Extension: return "extension";
        case Suite::SmallFreq: return "smallfreq";
        case Suite::Smoothing: return "smoothing";
        case Suite::Kernels: return "kernels";
        case Suite::Identities: return "identities";
    }
    return "unknown";
}

PlotKind parse_plot_kind(const std::string& s) {
    if (s == "loglog") return PlotKind::LogLog;
    if (s == "region-diagram") return PlotKind::RegionDiagram;
    throw std::invalid_argument("unknown plot kind '" + s + "'");
}

namespace {

// JSON numbers cannot hold inf/nan; such values are written as strings.
json number(double x) { return std::isfinite(x) ? json(x) : json(format_double(x)); }

std::ofstream open_out(const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write '" + path + "'");
    return out;
}

void row(std::ostream& os, std::initializer_list<std::string> cells) {
    bool first = true;
    for (const auto& c : cells) {
        if (!first) os << ',';
        os << c;
        first = false;
    }
    os << '\n';
}

}  // namespace

json to_json(const ResultRecord& r) {
    json j{{"id", r.id},
           {"params", r.params},
           {"predicted", number(r.predicted)},
           {"measured", number(r.measured)},
           {"residual", number(r.residual)},
           {"tolerance", number(r.tolerance)},
           {"pass", r.pass},
           {"wall_time_s", r.wall_time_s}};
    if (!r.error.empty()) j["error"] = r.error;
    return j;
}

void cmd_table(TableKind kind, const RunConfig& cfg, const std::string& path) {
    validate(cfg);
    std::ostringstream os;
    const auto f = format_double;
    switch (kind) {
        case TableKind::CFunction:
            row(os, {"d", "lambda", "c_re", "c_im", "c_abs", "density"});
            for (int d : cfg.dims) {
                const hb::ModelParams mp(d);
                for (double l : cfg.lambdas) {
                    const auto c = hb::harish_chandra_c(l, mp);
                    row(os, {std::to_string(d), f(l), f(c.c_value.real()), f(c.c_value.imag()), f(std::abs(c.c_value)),
                             f(c.density)});
                }
            }
            break;
        case TableKind::Phi:
            row(os, {"d", "lambda", "r", "phi"});
            for (int d : cfg.dims) {
                const hb::ModelParams mp(d);
                for (double l : cfg.lambdas)
                    for (double r : cfg.radii) row(os, {std::to_string(d), f(l), f(r), f(hb::spherical_fn(l, r, mp).value.real())});
            }
            break;
        case TableKind::Kernel:
            row(os, {"d", "Lambda", "piece", "k", "r", "kernel_re", "kernel_im"});
            for (int d : cfg.dims) {
                const hb::ModelParams mp(d);
                for (double L : cfg.lambdas) {
                    if (!(L > 1.0)) continue;
                    const int k0 = hb::dyadic_k0(L);
                    for (int k = k0 - 1; k <= k0 + 2; ++k) {
                        const bool is_j = k < k0;
                        const hb::DyadicPiece piece{L, is_j ? k0 : k, is_j ? hb::DyadicKind::J : hb::DyadicKind::K};
                        const auto m = hb::dyadic_symbol(piece);
                        const double top = *m.hat_support;
                        for (int i = 1; i <= 32; ++i) {
                            const double r = top * i / 32.0;
                            const auto v = hb::multiplier_kernel_at(m, r, mp);
                            row(os, {std::to_string(d), f(L), is_j ? "J" : "K", std::to_string(piece.k), f(r), f(v.real()),
                                     f(v.imag())});
                        }
                    }
                }
            }
            break;
        case TableKind::Exponents:
            row(os, {"d", "p", "p_st", "alpha", "branch"});
            for (int d : cfg.dims)
                for (double p : cfg.p) {
                    if (!(p > 2.0)) continue;
                    const auto e = hb::predict_projector(p, d);
                    row(os, {std::to_string(d), f(p), f(e.p_st), f(e.exponent), p >= e.p_st ? "upper" : "lower"});
                }
            break;
    }
    auto out = open_out(path);
    out << os.str();
    if (!out) throw std::runtime_error("cannot write '" + path + "'");
}

VerifyOutcome cmd_verify(Suite suite, const RunConfig& cfg) {
    const auto t0 = std::chrono::steady_clock::now();
    const auto records = run_suite(suite, cfg);
    int passed = 0, failed = 0;
    json recs = json::array();
    for (const auto& r : records) {
        (r.pass ? passed : failed)++;
        recs.push_back(to_json(r));
    }
    const double wall = cfg.timing ? std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count() : 0.0;
    VerifyOutcome o;
    o.report = {{"version", "1.0"},
                {"suite", to_string(suite)},
                {"config_echo", emit_config(cfg)},
                {"records", recs},
                {"summary", {{"passed", passed}, {"failed", failed}, {"wall_time_s", wall}}}};
    o.exit_code = failed == 0 ? 0 : 1;
    return o;
}

}  // namespace hypx

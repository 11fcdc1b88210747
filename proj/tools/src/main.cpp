#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hypx/commands.hpp"

namespace {

struct Overrides {
    std::string config;
    std::vector<int> d;
    std::vector<double> lambda, p, q;
    std::optional<double> tolerance;
    std::optional<std::uint64_t> seed;
};

void add_common(CLI::App* cmd, Overrides& o) {
    cmd->add_option("--config", o.config, "JSON run configuration");
    cmd->add_option("--d", o.d, "dimensions")->delimiter(',');
    cmd->add_option("--lambda", o.lambda, "frequency grid")->delimiter(',');
    cmd->add_option("--p", o.p, "p grid")->delimiter(',');
    cmd->add_option("--q", o.q, "q grid")->delimiter(',');
    cmd->add_option("--tolerance", o.tolerance, "slope tolerance");
    cmd->add_option("--seed", o.seed, "seed for randomized checks");
}

hypx::RunConfig resolve(const Overrides& o) {
    hypx::RunConfig c = o.config.empty() ? hypx::RunConfig{} : hypx::load_config(o.config);
    if (!o.d.empty()) c.dims = o.d;
    if (!o.lambda.empty()) c.lambdas = o.lambda;
    if (!o.p.empty()) c.p = o.p;
    if (!o.q.empty()) c.q = o.q;
    if (o.tolerance) c.tolerance = *o.tolerance;
    if (o.seed) c.seed = *o.seed;
    hypx::validate(c);
    return c;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"hypx: Fourier analysis experiments on hyperbolic space"};
    app.require_subcommand(1);

    Overrides table_o, verify_o;
    std::string table_kind, table_out;
    auto* table = app.add_subcommand("table", "write a CSV table");
    table->add_option("kind", table_kind, "c-function | phi | kernel | exponents")->required();
    table->add_option("--out", table_out, "CSV path")->required();
    add_common(table, table_o);

    std::string suite = "all", report_out;
    bool no_timing = false;
    auto* verify = app.add_subcommand("verify", "run verification suites and emit a JSON report");
    verify->add_option("--suite", suite, "all | projector | resolvent | extension | smallfreq | smoothing | kernels | identities");
    verify->add_option("--out", report_out, "JSON report path (stdout if omitted)");
    verify->add_flag("--no-timing", no_timing, "zero wall times for byte-identical reports");
    add_common(verify, verify_o);

    std::string plot_in, plot_kind = "loglog", plot_out;
    auto* plot = app.add_subcommand("plot", "render a CSV as SVG");
    plot->add_option("input", plot_in, "CSV path")->required();
    plot->add_option("--kind", plot_kind, "loglog | region-diagram");
    plot->add_option("--out", plot_out, "SVG path")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (*table) {
            hypx::cmd_table(hypx::parse_table_kind(table_kind), resolve(table_o), table_out);
            return 0;
        }
        if (*plot) {
            hypx::cmd_plot(plot_in, hypx::parse_plot_kind(plot_kind), plot_out);
            return 0;
        }
        auto cfg = resolve(verify_o);
        if (no_timing) cfg.timing = false;
        const auto outcome = hypx::cmd_verify(hypx::parse_suite(suite), cfg);
        const std::string text = outcome.report.dump(2) + "\n";
        if (report_out.empty()) {
            std::cout << text;
        } else {
            std::ofstream out(report_out, std::ios::binary);
            if (!out || !(out << text)) throw std::runtime_error("cannot write '" + report_out + "'");
        }
        const auto& s = outcome.report["summary"];
        std::fprintf(stderr, "passed %d, failed %d\n", s["passed"].get<int>(), s["failed"].get<int>());
        return outcome.exit_code;
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "usage error: %s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
}

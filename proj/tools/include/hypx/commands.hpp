#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "hypx/config.hpp"

namespace hypx {

struct ResultRecord {
    std::string id;
    nlohmann::json params = nlohmann::json::object();
    double predicted = 0.0;
    double measured = 0.0;  // fitted slope, or the checked quantity for non-scaling checks
    double residual = 0.0;
    double tolerance = 0.0;
    bool pass = false;
    double wall_time_s = 0.0;
    std::string error;
};

/// pass ⟺ |measured − predicted| ≤ tolerance.
ResultRecord make_record(std::string id, nlohmann::json params, double predicted, double measured, double tolerance);
nlohmann::json to_json(const ResultRecord& r);

enum class TableKind { CFunction, Phi, Kernel, Exponents };
enum class Suite { All, Projector, Resolvent, Extension, SmallFreq, Smoothing, Kernels, Identities };
enum class PlotKind { LogLog, RegionDiagram };

TableKind parse_table_kind(const std::string& s);
Suite parse_suite(const std::string& s);
PlotKind parse_plot_kind(const std::string& s);
std::string to_string(Suite s);

/// Fixed "%.17e" formatting independent of the locale.
std::string format_double(double x);

/// Writes the CSV to `path`; throws std::runtime_error naming the path if it cannot be written.
void cmd_table(TableKind kind, const RunConfig& cfg, const std::string& path);

/// Records of one suite, sorted by id.
std::vector<ResultRecord> run_suite(Suite suite, const RunConfig& cfg);

struct VerifyOutcome {
    nlohmann::json report;
    int exit_code = 0;  // 0 all pass, 1 any failure
};

VerifyOutcome cmd_verify(Suite suite, const RunConfig& cfg);

/// Reads a CSV and writes a self-contained SVG. loglog expects columns x,y and
/// optionally `predicted` (reference slope); region-diagram expects d and
/// diagram (resolvent | dresolvent), plus optional inv_s, inv_q, region points.
void cmd_plot(const std::string& csv_path, PlotKind kind, const std::string& svg_path);

/// CSV parse result; errors carry the 1-based line number.
struct CsvTable {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
    std::vector<int> line_numbers;  // source line of each row
    int column(const std::string& name) const;  // −1 if absent
};

CsvTable parse_csv(const std::string& text);

}  // namespace hypx

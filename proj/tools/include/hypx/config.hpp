#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

namespace hypx {

struct RunConfig {
    std::vector<int> dims{2, 3};
    std::vector<double> lambdas{8, 16, 32, 64};
    std::vector<double> small_lambdas{0.015625, 0.03125, 0.0625, 0.125};
    std::vector<double> p{3, 6, 8};
    std::vector<double> q{6};
    std::vector<double> s{1.5};
    std::vector<double> radii{0.25, 0.5, 1, 2, 4, 8};
    double r_max = 24.0;
    int s_nodes = 48;
    int v_nodes = 16;
    int cap_nodes = 32;
    double tolerance = 0.15;
    std::string out_dir = ".";
    std::uint64_t seed = 0;
    bool timing = true;  // false zeroes wall times so reports are byte-identical across runs

    bool operator==(const RunConfig&) const = default;
};

/// Throws std::invalid_argument on unknown keys, wrong types or out-of-range values.
RunConfig parse_config(const nlohmann::json& j);
RunConfig load_config(const std::string& path);
nlohmann::json emit_config(const RunConfig& c);
void validate(const RunConfig& c);

}  // namespace hypx

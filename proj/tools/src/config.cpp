#include "hypx/config.hpp"

#include <cmath>
#include <fstream>
#include <set>
#include <stdexcept>

namespace hypx {

namespace {

template <class T>
void read(const nlohmann::json& j, const char* key, T& out) {
    if (!j.contains(key)) return;
    try {
        out = j.at(key).get<T>();
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("config: bad value for '") + key + "': " + e.what());
    }
}

void require(bool ok, const std::string& what) {
    if (!ok) throw std::invalid_argument("config: " + what);
}

}  // namespace

void validate(const RunConfig& c) {
    require(!c.dims.empty(), "dims must not be empty");
    for (int d : c.dims) require(d >= 2, "d must be at least 2");
    for (double l : c.lambdas) require(l > 0.0 && std::isfinite(l), "lambda must be positive");
    for (double l : c.small_lambdas) require(l > 0.0 && l <= 1.0, "small_lambdas must lie in (0, 1]");
    for (double p : c.p) require(p >= 1.0, "p must be at least 1");
    for (double q : c.q) require(q >= 1.0, "q must be at least 1");
    for (double s : c.s) require(s >= 1.0, "s must be at least 1");
    for (double r : c.radii) require(r >= 0.0 && std::isfinite(r), "radii must be non-negative");
    require(c.r_max > 0.0, "r_max must be positive");
    require(c.s_nodes > 0 && c.v_nodes > 0 && c.cap_nodes > 0, "node counts must be positive");
    require(c.tolerance > 0.0, "tolerance must be positive");
}

RunConfig parse_config(const nlohmann::json& j) {
    static const std::set<std::string> known{"dims",    "lambdas",   "small_lambdas", "p",         "q",
                                             "s",       "radii",     "r_max",         "s_nodes",   "v_nodes",
                                             "cap_nodes", "tolerance", "out_dir",     "seed",      "timing"};
    if (!j.is_object()) throw std::invalid_argument("config: top level must be an object");
    for (const auto& [k, v] : j.items())
        if (!known.count(k)) throw std::invalid_argument("config: unknown key '" + k + "'");
    RunConfig c;
    read(j, "dims", c.dims);
    read(j, "lambdas", c.lambdas);
    read(j, "small_lambdas", c.small_lambdas);
    read(j, "p", c.p);
    read(j, "q", c.q);
    read(j, "s", c.s);
    read(j, "radii", c.radii);
    read(j, "r_max", c.r_max);
    read(j, "s_nodes", c.s_nodes);
    read(j, "v_nodes", c.v_nodes);
    read(j, "cap_nodes", c.cap_nodes);
    read(j, "tolerance", c.tolerance);
    read(j, "out_dir", c.out_dir);
    read(j, "seed", c.seed);
    read(j, "timing", c.timing);
    validate(c);
    return c;
}

RunConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open config '" + path + "'");
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument("config '" + path + "': " + e.what());
    }
    return parse_config(j);
}

nlohmann::json emit_config(const RunConfig& c) {
    return {{"dims", c.dims},       {"lambdas", c.lambdas}, {"small_lambdas", c.small_lambdas},
            {"p", c.p},             {"q", c.q},             {"s", c.s},
            {"radii", c.radii},     {"r_max", c.r_max},     {"s_nodes", c.s_nodes},
            {"v_nodes", c.v_nodes}, {"cap_nodes", c.cap_nodes}, {"tolerance", c.tolerance},
            {"out_dir", c.out_dir}, {"seed", c.seed},       {"timing", c.timing}};
}

}  // namespace hypx

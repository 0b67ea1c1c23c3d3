#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "symdom/dynamics.hpp"
#include "symdom/slice.hpp"

namespace symdom {

inline constexpr const char* run_schema = "symdom.run/1";

/// Orbit starting points: an explicit list, the in-ball nodes of a slice grid,
/// or seeded random points.
struct StartSpec {
    enum class Kind { list, grid, random } kind = Kind::random;
    std::vector<Element> points;
    std::optional<Slice> grid;
    int count = 9;
    double radius = 0.9;
};

struct OutputPaths {
    std::string report;
    std::string orbit_csv;
    std::string horoball_csv;
};

struct RunConfig {
    Factor factor = Factor::polydisc(1);
    std::optional<SelfMap> map;
    StartSpec starts;
    int iterations = 200;
    std::uint64_t seed = 1;
    std::vector<double> beta_schedule = default_beta_schedule();
    int invariance_samples = 500;
    double a0_hororadius = 0.5;
    Tolerances tol;
    std::optional<Slice> slice;
    std::vector<double> s_list{0.5, 1.0, 2.0};
    OutputPaths output;
};

/// Validates the whole document before returning; every failure is
/// Error(invalid_spec) with the offending key in the message.
RunConfig config_from_json(const nlohmann::json& j);
/// Canonical form: every field written, defaults included.
nlohmann::json config_to_json(const RunConfig& c);

/// Reads and parses a config file; unreadable files are Error(io).
RunConfig load_config(const std::string& path);

/// Points of the grid spec that lie in the open ball, row by row.
std::vector<Element> grid_starts(const Slice& s);
DynamicsConfig dynamics_config(const RunConfig& c);

}  // namespace symdom

#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "symdom/dynamics.hpp"
#include "symdom/slice.hpp"

namespace symdom {

/// Writes to a temporary sibling and renames it over `path`; failures are
/// Error(io) and leave any previous file in place.
void write_file_atomic(const std::string& path, const std::string& content);
void write_json_atomic(const std::string& path, const nlohmann::json& j);

/// %.17g; non-finite values print as nan, inf, -inf.
std::string format_double(double x);

/// n, re0, im0, ..., norm, kobayashi_step with one row per n = 0..N-1, the
/// step being kappa(f^n a, f^{n+1} a).
std::vector<std::string> orbit_csv_header(const Factor& f);
std::string orbit_csv(const OrbitRecord& r);

/// u, v, re0, im0, ..., F, in_ball, member_<s> for each s.
std::vector<std::string> horoball_csv_header(const Factor& f, const std::vector<double>& s_list);
std::string horoball_csv(const Factor& f, const std::vector<GridRow>& rows, const std::vector<double>& s_list);

/// Path of the k-th of `count` per-start files: `path` itself when count is 1,
/// otherwise the stem suffixed with _k.
std::string indexed_path(const std::string& path, int k, int count);

}  // namespace symdom

#include "symdom/config.hpp"

#include <fstream>
#include <sstream>

#include "symdom/serialize.hpp"
#include "symdom/triple.hpp"

namespace symdom {

namespace {

double positive_number(const json& j, const std::string& key) {
    if (!j.is_number() || !(j.get<double>() > 0.0))
        throw Error(ErrorCode::invalid_spec, "config: '" + key + "' must be a positive number");
    return j.get<double>();
}

int count_field(const json& j, const std::string& key, long long lo, long long hi) {
    if (!j.is_number_integer() || j.get<long long>() < lo || j.get<long long>() > hi)
        throw Error(ErrorCode::invalid_spec, "config: '" + key + "' must be an integer in [" + std::to_string(lo) +
                                                 ", " + std::to_string(hi) + "]");
    return j.get<int>();
}

std::string path_field(const json& j, const std::string& key) {
    if (!j.is_string()) throw Error(ErrorCode::invalid_spec, "config: output '" + key + "' must be a string");
    return j.get<std::string>();
}

StartSpec starts_from_json(const json& j, const Factor& f) {
    StartSpec s;
    if (j.is_array()) {
        s.kind = StartSpec::Kind::list;
        for (const auto& e : j) {
            s.points.push_back(element_from_json(e, f));
            if (element_norm(s.points.back()) >= 1.0)
                throw Error(ErrorCode::invalid_spec, "config: start points must lie in the open ball");
        }
        return s;
    }
    require_keys(j, {"grid", "random"}, "starts");
    if (j.size() != 1) throw Error(ErrorCode::invalid_spec, "starts: give exactly one of 'grid' or 'random'");
    if (j.contains("grid")) {
        s.kind = StartSpec::Kind::grid;
        s.grid = slice_from_json(j.at("grid"), f);
        return s;
    }
    const json& r = j.at("random");
    require_keys(r, {"count", "radius"}, "starts.random");
    if (r.contains("count")) s.count = count_field(r.at("count"), "starts.random.count", 0, 100000);
    if (r.contains("radius")) {
        s.radius = positive_number(r.at("radius"), "starts.random.radius");
        if (s.radius >= 1.0) throw Error(ErrorCode::invalid_spec, "starts.random: 'radius' must be below 1");
    }
    return s;
}

json starts_to_json(const StartSpec& s) {
    switch (s.kind) {
    case StartSpec::Kind::list: {
        json a = json::array();
        for (const auto& e : s.points) a.push_back(element_to_json(e));
        return a;
    }
    case StartSpec::Kind::grid:
        return {{"grid", slice_to_json(*s.grid)}};
    case StartSpec::Kind::random:
        break;
    }
    return {{"random", {{"count", s.count}, {"radius", s.radius}}}};
}

}  // namespace

RunConfig config_from_json(const json& j) {
    require_keys(j,
                 {"schema", "factor", "map", "starts", "iterations", "seed", "beta_schedule", "invariance_samples",
                  "a0_hororadius", "tolerances", "slice", "s_list", "output"},
                 "config");
    const json& schema = require_field(j, "schema", "config");
    if (!schema.is_string() || schema.get<std::string>() != run_schema)
        throw Error(ErrorCode::invalid_spec, std::string("config: 'schema' must be \"") + run_schema + "\"");

    RunConfig c;
    c.factor = factor_from_json(require_field(j, "factor", "config"));
    if (j.contains("tolerances")) {
        const json& t = j.at("tolerances");
        if (!t.is_object()) throw Error(ErrorCode::invalid_spec, "config: 'tolerances' must be an object");
        for (const auto& item : t.items()) {
            if (!item.value().is_number())
                throw Error(ErrorCode::invalid_spec, "tolerances: '" + item.key() + "' must be a number");
            c.tol.set(item.key(), item.value().get<double>());
        }
    }
    if (j.contains("map")) c.map = selfmap_from_json(j.at("map"), c.factor, c.tol);
    if (j.contains("starts")) c.starts = starts_from_json(j.at("starts"), c.factor);
    if (j.contains("iterations")) c.iterations = count_field(j.at("iterations"), "iterations", 0, 10000000);
    if (j.contains("seed")) {
        const json& s = j.at("seed");
        if (!s.is_number_unsigned() && !(s.is_number_integer() && s.get<long long>() >= 0))
            throw Error(ErrorCode::invalid_spec, "config: 'seed' must be a non-negative integer");
        c.seed = s.get<std::uint64_t>();
    }
    if (j.contains("beta_schedule")) {
        const json& b = j.at("beta_schedule");
        if (!b.is_array() || b.empty())
            throw Error(ErrorCode::invalid_spec, "config: 'beta_schedule' must be a non-empty array");
        c.beta_schedule.clear();
        for (const auto& v : b) {
            if (!v.is_number() || !(v.get<double>() > 0.0) || !(v.get<double>() < 1.0))
                throw Error(ErrorCode::invalid_spec, "config: 'beta_schedule' entries must lie in (0, 1)");
            if (!c.beta_schedule.empty() && !(v.get<double>() > c.beta_schedule.back()))
                throw Error(ErrorCode::invalid_spec, "config: 'beta_schedule' must be strictly increasing");
            c.beta_schedule.push_back(v.get<double>());
        }
    }
    if (j.contains("invariance_samples"))
        c.invariance_samples = count_field(j.at("invariance_samples"), "invariance_samples", 0, 10000000);
    if (j.contains("a0_hororadius")) c.a0_hororadius = positive_number(j.at("a0_hororadius"), "a0_hororadius");
    if (j.contains("slice")) c.slice = slice_from_json(j.at("slice"), c.factor);
    if (j.contains("s_list")) {
        const json& s = j.at("s_list");
        if (!s.is_array() || s.empty()) throw Error(ErrorCode::invalid_spec, "config: 's_list' must be a non-empty array");
        c.s_list.clear();
        for (const auto& v : s) c.s_list.push_back(positive_number(v, "s_list"));
    }
    if (j.contains("output")) {
        const json& o = j.at("output");
        require_keys(o, {"report", "orbit_csv", "horoball_csv"}, "output");
        if (o.contains("report")) c.output.report = path_field(o.at("report"), "report");
        if (o.contains("orbit_csv")) c.output.orbit_csv = path_field(o.at("orbit_csv"), "orbit_csv");
        if (o.contains("horoball_csv")) c.output.horoball_csv = path_field(o.at("horoball_csv"), "horoball_csv");
    }
    return c;
}

json config_to_json(const RunConfig& c) {
    json tol = json::object();
    for (const auto& n : Tolerances::names()) tol[n] = c.tol.get(n);
    json j = {{"schema", run_schema},
              {"factor", factor_to_json(c.factor)},
              {"starts", starts_to_json(c.starts)},
              {"iterations", c.iterations},
              {"seed", c.seed},
              {"beta_schedule", c.beta_schedule},
              {"invariance_samples", c.invariance_samples},
              {"a0_hororadius", c.a0_hororadius},
              {"tolerances", tol},
              {"s_list", c.s_list},
              {"output",
               {{"report", c.output.report}, {"orbit_csv", c.output.orbit_csv}, {"horoball_csv", c.output.horoball_csv}}}};
    if (c.map) j["map"] = selfmap_to_json(*c.map);
    if (c.slice) j["slice"] = slice_to_json(*c.slice);
    return j;
}

RunConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::io, "cannot read config '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    json j;
    try {
        j = json::parse(buf.str());
    } catch (const json::parse_error& e) {
        throw Error(ErrorCode::invalid_spec, "config '" + path + "' is not valid JSON: " + e.what());
    }
    return config_from_json(j);
}

std::vector<Element> grid_starts(const Slice& s) {
    std::vector<Element> out;
    for (int j = 0; j < s.steps; ++j)
        for (int i = 0; i < s.steps; ++i) {
            Element x = s.point(s.parameter(i), s.parameter(j));
            if (element_norm(x) < 1.0) out.push_back(std::move(x));
        }
    return out;
}

DynamicsConfig dynamics_config(const RunConfig& c) {
    DynamicsConfig d;
    d.beta_schedule = c.beta_schedule;
    d.iterations = c.iterations;
    d.seed = c.seed;
    d.invariance_samples = c.invariance_samples;
    d.a0_hororadius = c.a0_hororadius;
    d.tol = c.tol;
    switch (c.starts.kind) {
    case StartSpec::Kind::list:
        d.starts = c.starts.points;
        d.random_starts = 0;
        break;
    case StartSpec::Kind::grid:
        d.starts = grid_starts(*c.starts.grid);
        d.random_starts = 0;
        break;
    case StartSpec::Kind::random:
        d.random_starts = c.starts.count;
        d.start_radius = c.starts.radius;
        break;
    }
    return d;
}

}  // namespace symdom

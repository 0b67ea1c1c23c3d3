#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <spdlog/sinks/stdout_color_sinks.h>
#include <spdlog/spdlog.h>

#include "CLI11.hpp"
#include "symdom/config.hpp"
#include "symdom/demos.hpp"
#include "symdom/dynamics.hpp"
#include "symdom/io.hpp"
#include "symdom/serialize.hpp"
#include "symdom/verify.hpp"

using namespace symdom;

namespace {

enum Exit { exit_ok = 0, exit_check = 1, exit_usage = 2, exit_io = 3 };

int exit_code_for(ErrorCode c) {
    switch (c) {
    case ErrorCode::io:
        return exit_io;
    case ErrorCode::iteration_cap:
    case ErrorCode::singular_operator:
        return exit_check;
    default:
        return exit_usage;
    }
}

void setup_logging() {
    auto logger = spdlog::stderr_color_mt("symdom");
    logger->set_pattern("[%l] %v");
    spdlog::set_default_logger(logger);
    spdlog::set_level(spdlog::level::warn);
    if (const char* env = std::getenv("SYMDOM_LOG")) {
        const auto level = spdlog::level::from_str(env);
        if (level == spdlog::level::off && std::string(env) != "off")
            spdlog::warn("SYMDOM_LOG='{}' is not a level name; using warn", env);
        else
            spdlog::set_level(level);
    }
}

struct Common {
    std::string config_path;
    std::string out;
    std::optional<std::uint64_t> seed;
    std::vector<std::string> tol;
};

void add_common(CLI::App* cmd, Common& c, bool with_config) {
    if (with_config) cmd->add_option("--config", c.config_path, "run configuration (JSON)");
    cmd->add_option("--out", c.out, "output path");
    cmd->add_option("--seed", c.seed, "override the configured seed");
    cmd->add_option("--tol", c.tol, "tolerance override NAME=VALUE (repeatable)")->take_all();
}

void apply_tolerances(Tolerances& tol, const std::vector<std::string>& overrides) {
    for (const auto& o : overrides) {
        const auto eq = o.find('=');
        if (eq == std::string::npos || eq == 0)
            throw Error(ErrorCode::invalid_spec, "--tol expects NAME=VALUE, got '" + o + "'");
        double value = 0.0;
        try {
            std::size_t used = 0;
            value = std::stod(o.substr(eq + 1), &used);
            if (used != o.size() - eq - 1) throw std::invalid_argument("trailing characters");
        } catch (const std::exception&) {
            throw Error(ErrorCode::invalid_spec, "--tol value in '" + o + "' is not a number");
        }
        tol.set(o.substr(0, eq), value);
    }
}

RunConfig load_run(const Common& c) {
    if (c.config_path.empty()) throw Error(ErrorCode::invalid_spec, "--config is required");
    RunConfig cfg = load_config(c.config_path);
    if (c.seed) cfg.seed = *c.seed;
    apply_tolerances(cfg.tol, c.tol);
    return cfg;
}

const SelfMap& require_map(const RunConfig& cfg) {
    if (!cfg.map) throw Error(ErrorCode::invalid_spec, "config: 'map' is required for this command");
    return *cfg.map;
}

std::string pick(const std::string& flag, const std::string& configured, const std::string& fallback) {
    if (!flag.empty()) return flag;
    return configured.empty() ? fallback : configured;
}

bool report_ok(const DenjoyWolffReport& r) {
    if (r.wolff.verdict == FixedPointVerdict::interior_fixed_point) return true;
    if (r.wolff.verdict == FixedPointVerdict::indeterminate || r.verdict == "indeterminate") return false;
    return r.all_captured && r.wolff.invariance_relative <= r.tol.invariance;
}

nlohmann::json full_report(const SelfMap& f, const DynamicsConfig& d, DenjoyWolffReport& r) {
    r = denjoy_wolff_report(f, d);
    nlohmann::json j = report_to_json(r);
    if (f.factor().kind() == Factor::Kind::hilbert && r.wolff.verdict == FixedPointVerdict::fixed_point_free) {
        const HilbertAlternative h = hilbert_alternative(f, d);
        j["hilbert_alternative"] = {{"verdict", h.verdict},
                                    {"max_distance", h.max_distance},
                                    {"interior_limits", h.interior_limits}};
        if (h.zeta) j["hilbert_alternative"]["zeta"] = element_to_json(*h.zeta);
    }
    return j;
}

int cmd_verify(const Common& c, const std::string& factor_spec, int trials) {
    Factor f = Factor::polydisc(1);
    Tolerances tol;
    std::uint64_t seed = 1;
    if (!factor_spec.empty()) {
        nlohmann::json j;
        try {
            j = nlohmann::json::parse(factor_spec);
        } catch (const nlohmann::json::parse_error& e) {
            throw Error(ErrorCode::invalid_spec, std::string("--factor is not valid JSON: ") + e.what());
        }
        f = factor_from_json(j);
    } else if (!c.config_path.empty()) {
        const RunConfig cfg = load_config(c.config_path);
        f = cfg.factor;
        tol = cfg.tol;
        seed = cfg.seed;
    } else {
        throw Error(ErrorCode::invalid_spec, "verify needs --factor or --config");
    }
    if (c.seed) seed = *c.seed;
    apply_tolerances(tol, c.tol);
    if (trials < 1) throw Error(ErrorCode::invalid_spec, "--trials must be positive");

    spdlog::info("verify {} with {} trials, seed {}", f.describe(), trials, seed);
    const VerifyReport r = verify_factor(f, trials, seed, tol);
    if (!c.out.empty()) write_json_atomic(c.out, verify_to_json(r));
    std::cout << "factor " << r.factor << ", " << trials << " trials, seed " << seed << "\n";
    for (const auto& k : r.checks) {
        char line[160];
        std::snprintf(line, sizeof line, "  %-36s max %.3e  tol %.1e  %s\n", k.name.c_str(), k.worst, k.tolerance,
                      k.passed() ? "ok" : "FAIL");
        std::cout << line;
    }
    std::cout << (r.passed() ? "all identities hold" : "identity check failed") << "\n";
    return r.passed() ? exit_ok : exit_check;
}

int cmd_wolff(const Common& c) {
    const RunConfig cfg = load_run(c);
    const SelfMap& f = require_map(cfg);
    const std::string out = pick(c.out, cfg.output.report, "wolff_report.json");
    DenjoyWolffReport r{f.factor(), {}, {}, "", std::nullopt, 0.0, std::nullopt, std::nullopt, {}, {}, 0, 0, 0.0,
                        false, false, "", cfg.tol};
    nlohmann::json j = full_report(f, dynamics_config(cfg), r);
    j["config"] = config_to_json(cfg);
    write_json_atomic(out, j);
    std::cout << r.conclusion << "\n";
    spdlog::info("report written to {}", out);
    return report_ok(r) ? exit_ok : exit_check;
}

int cmd_orbit(const Common& c) {
    const RunConfig cfg = load_run(c);
    const SelfMap& f = require_map(cfg);
    const std::string out = pick(c.out, cfg.output.orbit_csv, "orbit.csv");
    const std::vector<Element> starts = resolve_starts(cfg.factor, dynamics_config(cfg));
    if (starts.empty()) throw Error(ErrorCode::invalid_spec, "config: no start points");
    for (std::size_t k = 0; k < starts.size(); ++k) {
        const OrbitRecord o = orbit(f, starts[k], cfg.iterations, cfg.tol);
        const std::string path = indexed_path(out, static_cast<int>(k), static_cast<int>(starts.size()));
        write_file_atomic(path, orbit_csv(o));
        std::cout << path << ": " << cfg.iterations << " steps, final norm " << format_double(o.norms.back())
                  << "\n";
    }
    return exit_ok;
}

int cmd_horoball(const Common& c) {
    const RunConfig cfg = load_run(c);
    const SelfMap& f = require_map(cfg);
    if (!cfg.slice) throw Error(ErrorCode::invalid_spec, "config: 'slice' is required for horoball");
    const std::string out = pick(c.out, cfg.output.horoball_csv, "horoball.csv");
    const WolffData w = wolff(f, cfg.beta_schedule, cfg.seed, 0, cfg.tol);
    if (!w.F) {
        std::cout << "no horofunction: " << to_string(w.verdict) << "\n";
        return exit_check;
    }
    const std::vector<GridRow> rows = horoball_grid(*w.F, *cfg.slice, cfg.s_list, cfg.tol);
    write_file_atomic(out, horoball_csv(cfg.factor, rows, cfg.s_list));
    int inside = 0;
    for (const auto& r : rows) inside += r.in_ball;
    std::cout << out << ": " << rows.size() << " grid points, " << inside << " inside the ball\n";
    return exit_ok;
}

int cmd_demo(const Common& c, const std::string& name, bool list) {
    if (list) {
        for (const auto& n : demo_names()) std::cout << n << ": " << make_demo(n).description << "\n";
        return exit_ok;
    }
    if (name.empty()) throw Error(ErrorCode::invalid_spec, "demo needs a scenario name (see --list)");
    Demo d = make_demo(name, c.seed.value_or(1));
    apply_tolerances(d.config.tol, c.tol);
    const std::filesystem::path dir = c.out.empty() ? std::filesystem::path("demo-out") / name : std::filesystem::path(c.out);

    RunConfig cfg;
    cfg.factor = d.map.factor();
    cfg.map = d.map;
    cfg.iterations = d.config.iterations;
    cfg.seed = d.config.seed;
    cfg.beta_schedule = d.config.beta_schedule;
    cfg.invariance_samples = d.config.invariance_samples;
    cfg.a0_hororadius = d.config.a0_hororadius;
    cfg.tol = d.config.tol;
    cfg.starts.count = d.config.random_starts;
    cfg.starts.radius = d.config.start_radius;
    cfg.slice = d.slice;
    cfg.s_list = d.s_list;
    cfg.output = {(dir / "report.json").string(), (dir / "orbit.csv").string(), (dir / "horoball.csv").string()};

    DenjoyWolffReport r{d.map.factor(), {}, {}, "", std::nullopt, 0.0, std::nullopt, std::nullopt, {}, {}, 0, 0, 0.0,
                        false, false, "", d.config.tol};
    nlohmann::json j = full_report(d.map, d.config, r);
    j["demo"] = {{"name", d.name}, {"description", d.description}};
    j["config"] = config_to_json(cfg);
    bool ok = report_ok(r);
    if (name.rfind("bidisc-case-", 0) == 0) {
        const AppendixReport a = bidisc_appendix_suite(appendix_case_from_string(std::string(1, name.back())), d.config);
        j["appendix"] = appendix_to_json(a);
        j["appendix"].erase("report");
        j["appendix"]["passed"] = a.passed;
        ok = ok && a.passed;
    }

    const int n_orbits = static_cast<int>(r.limits.orbits.size());
    for (int k = 0; k < n_orbits; ++k)
        write_file_atomic(indexed_path(cfg.output.orbit_csv, k, n_orbits), orbit_csv(r.limits.orbits[k]));
    if (r.wolff.F) {
        const std::vector<GridRow> rows = horoball_grid(*r.wolff.F, d.slice, d.s_list, d.config.tol);
        write_file_atomic(cfg.output.horoball_csv, horoball_csv(cfg.factor, rows, d.s_list));
    }
    write_json_atomic((dir / "config.json").string(), config_to_json(cfg));
    write_json_atomic(cfg.output.report, j);

    std::cout << d.name << ": " << r.conclusion << "\n";
    std::cout << "limit hypothesis: " << r.hypothesis.status << "\n";
    std::cout << "output in " << dir.string() << "\n";
    return ok ? exit_ok : exit_check;
}

}  // namespace

int main(int argc, char** argv) {
    setup_logging();
    CLI::App app{"Bounded symmetric domains: identity checks and iteration experiments"};
    app.require_subcommand(1);

    Common common;
    std::string factor_spec;
    int trials = 200;
    auto* verify = app.add_subcommand("verify", "run the identity suites on random elements of a factor");
    add_common(verify, common, true);
    verify->add_option("--factor", factor_spec, "factor spec (JSON)");
    verify->add_option("--trials", trials, "random trials per identity");

    auto* wolff_cmd = app.add_subcommand("wolff", "Wolff construction and Denjoy-Wolff report for a configured map");
    add_common(wolff_cmd, common, true);
    auto* orbit_cmd = app.add_subcommand("orbit", "orbit CSV per configured start");
    add_common(orbit_cmd, common, true);
    auto* horo_cmd = app.add_subcommand("horoball", "horofunction and horoball membership on a slice grid");
    add_common(horo_cmd, common, true);

    std::string demo_name;
    bool demo_list = false;
    auto* demo = app.add_subcommand("demo", "run a named scenario and write its report and CSVs");
    add_common(demo, common, false);
    demo->add_option("name", demo_name, "scenario name");
    demo->add_flag("--list", demo_list, "list the scenarios");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? exit_ok : exit_usage;
    }

    try {
        if (verify->parsed()) return cmd_verify(common, factor_spec, trials);
        if (wolff_cmd->parsed()) return cmd_wolff(common);
        if (orbit_cmd->parsed()) return cmd_orbit(common);
        if (horo_cmd->parsed()) return cmd_horoball(common);
        if (demo->parsed()) return cmd_demo(common, demo_name, demo_list);
    } catch (const Error& e) {
        spdlog::error("{}: {}", to_string(e.code()), e.what());
        return exit_code_for(e.code());
    } catch (const nlohmann::json::exception& e) {
        spdlog::error("invalid_spec: {}", e.what());
        return exit_usage;
    } catch (const std::exception& e) {
        spdlog::error("{}", e.what());
        return exit_check;
    }
    return exit_usage;
}

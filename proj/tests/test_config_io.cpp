#include "doctest.h"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "oracles.hpp"
#include "symdom/config.hpp"
#include "symdom/io.hpp"
#include "symdom/serialize.hpp"
#include "symdom/triple.hpp"

using namespace symdom;
using nlohmann::json;
namespace fs = std::filesystem;

namespace {

const char* full_config = R"({
  "schema": "symdom.run/1",
  "factor": {"type": "polydisc", "d": 2},
  "map": {"pipeline": [{"op": "coordwise", "parts": [{"type": "mobius", "b": [0.5, 0]}, {"type": "identity"}]}]},
  "starts": [[[0.1, 0], [0, 0.2]], [[0, 0], [0, 0]]],
  "iterations": 25,
  "seed": 99,
  "beta_schedule": [0.5, 0.75, 0.875],
  "tolerances": {"capture": 0.002, "cluster_tol": 0.0005},
  "slice": {"origin": [[0, 0], [0, 0]], "u": [[1, 0], [0, 0]], "v": [[0, 0], [1, 0]], "range": [-0.5, 0.5], "steps": 11},
  "s_list": [1, 2],
  "output": {"report": "r.json", "orbit_csv": "o.csv"}
})";

fs::path scratch_dir() {
    const fs::path p = fs::temp_directory_path() / ("symdom_test_" + std::to_string(::getpid()));
    fs::create_directories(p);
    return p;
}

std::string read(const fs::path& p) {
    std::ifstream in(p);
    std::stringstream s;
    s << in.rdbuf();
    return s.str();
}

Slice disc_slice(int steps) {
    const Factor d = Factor::polydisc(1);
    return Slice{Element::zero(d), Element::basis(d, 0), Element::basis(d, 0) * cplx(0, 1), -1.0, 1.0, steps};
}

}  // namespace

TEST_CASE("config round trip: parse, serialize, parse is the identity") {
    const RunConfig c = config_from_json(json::parse(full_config));
    CHECK(c.iterations == 25);
    CHECK(c.seed == 99);
    CHECK(c.tol.capture == 0.002);
    CHECK(c.starts.kind == StartSpec::Kind::list);
    const json once = config_to_json(c);
    const json twice = config_to_json(config_from_json(once));
    CHECK(once == twice);
    CHECK(once.at("schema") == "symdom.run/1");
}

TEST_CASE("config round trip for grid and random starts") {
    json j = json::parse(full_config);
    j["starts"] = json::parse(R"({"grid": {"u": [[0.5, 0], [0, 0]], "v": [[0, 0], [0.5, 0]], "steps": 3}})");
    RunConfig c = config_from_json(j);
    CHECK(c.starts.kind == StartSpec::Kind::grid);
    CHECK(config_to_json(config_from_json(config_to_json(c))) == config_to_json(c));
    CHECK(grid_starts(*c.starts.grid).size() == 9);

    j["starts"] = json::parse(R"({"random": {"count": 4, "radius": 0.5}})");
    c = config_from_json(j);
    CHECK(c.starts.kind == StartSpec::Kind::random);
    const DynamicsConfig d = dynamics_config(c);
    const std::vector<Element> starts = resolve_starts(c.factor, d);
    REQUIRE(starts.size() == 4);
    for (const auto& s : starts) CHECK(element_norm(s) < 0.5);
    CHECK(config_to_json(config_from_json(config_to_json(c))) == config_to_json(c));
}

TEST_CASE("config validation rejects malformed documents") {
    const std::vector<std::pair<std::string, std::string>> edits{
        {"/bogus", "1"},
        {"/schema", "\"symdom.run/2\""},
        {"/iterations", "-1"},
        {"/seed", "\"x\""},
        {"/beta_schedule", "[0.5, 0.4]"},
        {"/beta_schedule", "[1.0]"},
        {"/tolerances/nope", "1"},
        {"/tolerances/capture", "-1"},
        {"/output/extra", "\"x\""},
        {"/slice/steps", "0"},
        {"/s_list", "[]"},
        {"/factor", R"({"type":"rect","rows":2})"},
        {"/starts", "[[[2, 0], [0, 0]]]"},
        {"/starts", R"({"grid": {}, "random": {}})"},
    };
    for (const auto& [ptr, value] : edits) {
        CAPTURE(ptr);
        json j = json::parse(full_config);
        j[json::json_pointer(ptr)] = json::parse(value);
        try {
            config_from_json(j);
            FAIL("accepted");
        } catch (const Error& e) {
            CHECK(e.code() == ErrorCode::invalid_spec);
        }
    }
    json j = json::parse(full_config);
    j.erase("schema");
    CHECK_THROWS_AS(config_from_json(j), Error);
}

TEST_CASE("load_config distinguishes unreadable files from bad content") {
    const fs::path dir = scratch_dir();
    try {
        load_config((dir / "missing.json").string());
        FAIL("accepted");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::io);
    }
    write_file_atomic((dir / "broken.json").string(), "{ not json");
    try {
        load_config((dir / "broken.json").string());
        FAIL("accepted");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::invalid_spec);
    }
    fs::remove_all(dir);
}

TEST_CASE("doubles are written with 17 significant digits and read back exactly") {
    std::mt19937_64 rng(1);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (int k = 0; k < 1000; ++k) {
        const double x = u(rng) * std::pow(10.0, static_cast<int>(u(rng) * 20));
        CHECK(std::strtod(format_double(x).c_str(), nullptr) == x);
    }
    CHECK(format_double(0.1) == "0.10000000000000001");
    CHECK(format_double(NAN) == "nan");
    CHECK(format_double(-INFINITY) == "-inf");
}

TEST_CASE("orbit CSV layout") {
    SelfMap f(Factor::polydisc(2));
    f.coordwise({SelfMap::PartMap::mobius(0.5), SelfMap::PartMap::identity()});
    CHECK(orbit_csv_header(f.factor()) ==
          std::vector<std::string>{"n", "re0", "im0", "re1", "im1", "norm", "kobayashi_step"});

    const std::string empty = orbit_csv(orbit(f, Element::zero(f.factor()), 0));
    CHECK(empty == "n,re0,im0,re1,im1,norm,kobayashi_step\n");

    const std::string csv = orbit_csv(orbit(f, Element::zero(f.factor()), 3));
    std::istringstream in(csv);
    std::string line;
    std::vector<std::string> lines;
    while (std::getline(in, line)) lines.push_back(line);
    REQUIRE(lines.size() == 4);
    CHECK(lines[1].rfind("0,0,0,0,0,0,", 0) == 0);
    CHECK(lines[2].rfind("1,0.5,0,0,0,0.5,", 0) == 0);
}

TEST_CASE("horoball CSV layout and disc geometry") {
    const HorofunctionData F =
        HorofunctionData::from_limit_data({Element::basis(Factor::polydisc(1), 0)}, {1.0});
    const std::vector<double> s_list{0.5, 1.0, 2.0};
    const Slice sl = disc_slice(81);
    const std::vector<GridRow> rows = horoball_grid(F, sl, s_list);
    CHECK(horoball_csv_header(F.factor(), s_list) ==
          std::vector<std::string>{"u", "v", "re0", "im0", "F", "in_ball", "member_0.5", "member_1", "member_2"});
    REQUIRE(rows.size() == 81u * 81u);
    const double cell = (sl.hi - sl.lo) / (sl.steps - 1);
    int checked = 0;
    for (const auto& r : rows) {
        const cplx z = r.x[0];
        CHECK(r.in_ball == (std::abs(z) < 1.0));
        if (!r.in_ball) {
            CHECK(std::isnan(r.F));
            continue;
        }
        // nesting in s
        CHECK((!r.member[0] || r.member[1]));
        CHECK((!r.member[1] || r.member[2]));
        // s = 1: the disc of centre 1/2 and radius 1/2, away from the boundary circle
        const double gap = std::abs(z - 0.5) - 0.5;
        if (std::abs(gap) > cell) {
            CHECK(r.member[1] == (gap < 0.0));
            ++checked;
        }
    }
    CHECK(checked > 1000);
    const std::string csv = horoball_csv(F.factor(), rows, s_list);
    CHECK(csv.rfind("u,v,re0,im0,F,in_ball,member_0.5,member_1,member_2\n", 0) == 0);
}

TEST_CASE("bidisc real slice of a horoball at (1,1) is a product of two intervals") {
    const Factor p = Factor::polydisc(2);
    const HorofunctionData F =
        HorofunctionData::from_limit_data({Element::basis(p, 0), Element::basis(p, 1)}, {1.0, 1.0});
    const Slice sl{Element::zero(p), Element::basis(p, 0), Element::basis(p, 1), -0.99, 0.99, 45};
    const double s = 1.0;
    const double lo = (1.0 - s) / (1.0 + s);
    for (const auto& r : horoball_grid(F, sl, {s})) {
        const bool expected = r.u > lo && r.v > lo;
        if (std::abs(r.u - lo) < 1e-9 || std::abs(r.v - lo) < 1e-9) continue;
        CHECK(r.member[0] == expected);
    }
}

TEST_CASE("atomic writes replace files and report I/O failures") {
    const fs::path dir = scratch_dir();
    const fs::path target = dir / "sub" / "out.csv";
    write_file_atomic(target.string(), "first\n");
    write_file_atomic(target.string(), "second\n");
    CHECK(read(target) == "second\n");
    CHECK_FALSE(fs::exists(target.string() + ".tmp"));
    try {
        write_file_atomic((target / "child.csv").string(), "x");
        FAIL("accepted");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::io);
    }
    fs::remove_all(dir);
}

TEST_CASE("per-start file names") {
    CHECK(indexed_path("out/orbit.csv", 0, 1) == "out/orbit.csv");
    CHECK(indexed_path("out/orbit.csv", 3, 5) == "out/orbit_3.csv");
    CHECK(indexed_path("orbit", 1, 2) == "orbit_1");
}

TEST_CASE("factor specs round trip") {
    for (const char* s : {R"({"type":"rect","rows":2,"cols":3})", R"({"type":"spin","dim":4})",
                          R"({"type":"hilbert","dim":3})", R"({"type":"polydisc","d":2})",
                          R"({"type":"sum","parts":[{"type":"hilbert","dim":2},{"type":"rect","rows":1,"cols":1}]})"}) {
        const Factor f = factor_from_json(json::parse(s));
        CHECK(factor_from_json(factor_to_json(f)) == f);
    }
}

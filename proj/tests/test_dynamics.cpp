#include "doctest.h"

#include "oracles.hpp"
#include "symdom/demos.hpp"
#include "symdom/dynamics.hpp"
#include "symdom/random.hpp"
#include "symdom/triple.hpp"

using namespace symdom;

namespace {

using P = SelfMap::PartMap;

SelfMap psi_half() {
    SelfMap f(Factor::polydisc(1));
    f.coordwise({P::mobius(0.5)});
    return f;
}

}  // namespace

TEST_CASE("fixed point of beta psi_1/2 solves z^2 + 2(1-beta) z - beta = 0") {
    for (double beta : {0.5, 0.9, 0.99}) {
        const FixedPointResult r = earle_hamilton(psi_half(), beta);
        const double expected = -(1.0 - beta) + std::sqrt((1.0 - beta) * (1.0 - beta) + beta);
        CHECK(std::abs(r.z[0] - expected) < 1e-10);
        CHECK(r.residual <= 1e-12);
    }
}

TEST_CASE("fixed point of beta (z + 1)/2 is beta/(2 - beta)") {
    SelfMap f(Factor::polydisc(1));
    f.coordwise({P::affine(0.5, 0.5)});
    for (double beta : {0.75, 0.999}) {
        const FixedPointResult r = earle_hamilton(f, beta);
        CHECK(std::abs(r.z[0] - beta / (2.0 - beta)) < 1e-10);
    }
}

TEST_CASE("the beta schedule is 1 - 2^-k for k = 3..14") {
    const std::vector<double> b = default_beta_schedule();
    REQUIRE(b.size() == 12);
    CHECK(b.front() == 1.0 - std::ldexp(1.0, -3));
    CHECK(b.back() == 1.0 - std::ldexp(1.0, -14));
}

TEST_CASE("orbit of 0 under psi_1/2 is tanh(n artanh 1/2)") {
    const OrbitRecord o = orbit(psi_half(), Element::zero(Factor::polydisc(1)), 50);
    REQUIRE(o.points.size() == 51);
    REQUIRE(o.kobayashi_steps.size() == 50);
    for (int n = 0; n <= 50; n += 7) CHECK(std::abs(o.points[n][0] - std::tanh(n * std::atanh(0.5))) < 1e-12);
    CHECK(o.norms.back() >= 1.0 - 1e-9);
    CHECK(o.kobayashi_steps.front() == doctest::Approx(std::atanh(0.5)));
    REQUIRE(o.clusters.size() == 1);
    CHECK(std::abs(o.clusters.front().centre[0] - 1.0) < 1e-10);
}

TEST_CASE("an orbit of length zero holds only its start") {
    const OrbitRecord o = orbit(psi_half(), Element::zero(Factor::polydisc(1)), 0);
    CHECK(o.points.size() == 1);
    CHECK(o.kobayashi_steps.empty());
    CHECK_THROWS_AS(orbit(psi_half(), Element::zero(Factor::polydisc(1)), -1), Error);
}

TEST_CASE("complete-linkage clustering") {
    const Factor d = Factor::polydisc(1);
    auto pt = [&](double x) { return Element(d, CVec::Constant(1, x)); };
    const std::vector<TailCluster> c = cluster_points({pt(0.1), pt(0.1005), pt(0.5), pt(0.1002), pt(0.5004)}, 1e-3);
    REQUIRE(c.size() == 2);
    CHECK(c[0].count == 3);
    CHECK(c[1].count == 2);
    CHECK(c[0].diameter == doctest::Approx(5e-4));
}

TEST_CASE("Wolff construction for psi_1/2") {
    const WolffData w = wolff(psi_half(), default_beta_schedule(), 3, 200);
    CHECK(w.verdict == FixedPointVerdict::fixed_point_free);
    REQUIRE(w.F);
    REQUIRE(w.F->q() == 1);
    CHECK(std::abs(w.F->frame()[0][0] - 1.0) < 1e-6);
    REQUIRE(w.zeta);
    CHECK(std::abs((*w.zeta)[0] - 1.0) < 1e-6);
    CHECK(w.invariance_samples > 0);
    CHECK(w.invariance_relative <= 1e-6);
}

TEST_CASE("a map with an interior fixed point is reported as such") {
    SelfMap f(Factor::polydisc(2));
    f.scale(0.5);
    DynamicsConfig cfg;
    cfg.iterations = 40;
    cfg.random_starts = 3;
    const DenjoyWolffReport r = denjoy_wolff_report(f, cfg);
    CHECK(r.wolff.verdict == FixedPointVerdict::interior_fixed_point);
    CHECK(r.verdict.rfind("fixed point found at", 0) == 0);
    REQUIRE(r.wolff.interior_point);
    CHECK(element_norm(*r.wolff.interior_point) < 1e-9);
}

TEST_CASE("disc report names the component {1}") {
    DynamicsConfig cfg;
    cfg.iterations = 100;
    const DenjoyWolffReport r = denjoy_wolff_report(psi_half(), cfg);
    CHECK(r.conclusion == "fixed-point free; component {1}; all clusters captured");
    CHECK(r.hypothesis.status == "holds");
}

TEST_CASE("reports are deterministic under the seed") {
    const Demo d = make_demo("hilbert3", 5);
    const std::string a = report_to_json(denjoy_wolff_report(d.map, d.config)).dump();
    const std::string b = report_to_json(denjoy_wolff_report(d.map, d.config)).dump();
    CHECK(a == b);
}

TEST_CASE("limit hypothesis: abelian holds, E11 in 2x2 matrices fails") {
    const Factor p = Factor::polydisc(2);
    CVec z(2);
    z << 1.0, 0.2;
    CHECK(check_limit_hypothesis(p, {{Element(p, z), 5, 0.0}}).status == "holds");
    const Factor r = Factor::rectangular(2, 2);
    CHECK(check_limit_hypothesis(r, {{Element::basis(r, 0), 5, 0.0}}).status ==
          "fails: minimal non-structural limit tripotent");
    CHECK(check_limit_hypothesis(r, {{Element::basis(r, 0) * 0.5, 5, 0.0}}).status.rfind("indeterminate", 0) == 0);
}

TEST_CASE("Hilbert alternative on the hilbert3 demo") {
    const Demo d = make_demo("hilbert3");
    const HilbertAlternative h = hilbert_alternative(d.map, d.config);
    CHECK(h.verdict == "boundary point");
    REQUIRE(h.zeta);
    CHECK(std::abs(element_norm(*h.zeta) - 1.0) < 1e-6);
}

TEST_CASE("bidisc cases: horofunction closed form and dichotomy") {
    CHECK(disc_horofunction(1.0) == 0.0);
    CHECK(disc_horofunction(0.0) == doctest::Approx(1.0));
    CHECK(disc_horofunction(cplx(0.3, 0.4)) == doctest::Approx(oracle::disc_F(cplx(0.3, 0.4))));
    for (AppendixCase c : {AppendixCase::a, AppendixCase::b, AppendixCase::c}) {
        CAPTURE(to_string(c));
        DynamicsConfig cfg;
        const AppendixReport r = bidisc_appendix_suite(c, cfg);
        CHECK(r.dichotomy_ok);
        CHECK(r.passed);
    }
}

TEST_CASE("case (b) decays below 1e-3 within 60 steps") {
    const AppendixReport r = bidisc_appendix_suite(AppendixCase::b, DynamicsConfig{});
    for (const auto& s : r.starts) {
        CHECK(s.decay_index >= 0);
        CHECK(s.decay_index <= 60);
    }
}

TEST_CASE("appendix maps match their formulas") {
    const Factor p = Factor::polydisc(2);
    CVec z(2);
    z << cplx(0.2, 0.1), cplx(-0.3, 0.4);
    const cplx x = z[0], y = z[1];
    auto psi = [](cplx w) { return oracle::disc_mobius(0.5, w); };
    const Element a = appendix_map(AppendixCase::a)(Element(p, z));
    CHECK(std::abs(a[0] - psi(x)) < 1e-14);
    CHECK(std::abs(a[1] - (psi(x) / 4.0 + y / 2.0)) < 1e-14);
    const Element b = appendix_map(AppendixCase::b)(Element(p, z));
    CHECK(std::abs(b[1] - psi(y)) < 1e-14);
    const Element c = appendix_map(AppendixCase::c)(Element(p, z));
    CHECK(std::abs(c[0] - psi((2.0 * x + y) / 3.0)) < 1e-14);
    CHECK(std::abs(c[1] - psi((x + 2.0 * y) / 3.0)) < 1e-14);
}

TEST_CASE("every demo builds and its map keeps the ball") {
    for (const auto& name : demo_names()) {
        CAPTURE(name);
        const Demo d = make_demo(name);
        CHECK(d.name == name);
        Rng rng(2);
        for (int k = 0; k < 10; ++k) CHECK(element_norm(d.map(random_element(d.map.factor(), 0.99, rng))) < 1.0);
    }
    CHECK_THROWS_AS(make_demo("no-such-demo"), Error);
}

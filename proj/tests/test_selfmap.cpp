#include "doctest.h"

#include "oracles.hpp"
#include "symdom/demos.hpp"
#include "symdom/random.hpp"
#include "symdom/selfmap.hpp"
#include "symdom/triple.hpp"

using namespace symdom;
using nlohmann::json;

TEST_CASE("every demo map survives a DSL round trip") {
    for (const auto& name : demo_names()) {
        CAPTURE(name);
        const Demo d = make_demo(name);
        const json j = selfmap_to_json(d.map);
        const SelfMap back = selfmap_from_json(j, d.map.factor());
        CHECK(selfmap_to_json(back) == j);
        Rng rng(4);
        for (int k = 0; k < 5; ++k) {
            const Element x = random_element(d.map.factor(), 0.9, rng);
            CHECK(element_norm(back(x) - d.map(x)) < 1e-14);
        }
    }
}

TEST_CASE("pipeline stages compose left to right") {
    const Factor d = Factor::polydisc(1);
    const json j = json::parse(R"({"pipeline":[{"op":"scale","lambda":[0,0.5]},
                                               {"op":"transvection","a":[[0.25,0]]}]})");
    const SelfMap f = selfmap_from_json(j, d);
    const cplx z(0.3, -0.2);
    const cplx expected = oracle::disc_mobius(0.25, cplx(0, 0.5) * z);
    CHECK(std::abs(f(Element(d, CVec::Constant(1, z)))[0] - expected) < 1e-14);
}

TEST_CASE("scalar fields accept plain numbers") {
    const Factor d = Factor::polydisc(2);
    const json j = json::parse(R"({"pipeline":[{"op":"coordwise","parts":[{"type":"mobius","b":0.5},
                                                                           {"type":"affine","alpha":0.5,"beta":0.5}]}]})");
    const SelfMap f = selfmap_from_json(j, d);
    CVec z(2);
    z << 0.0, 0.0;
    const Element y = f(Element(d, z));
    CHECK(std::abs(y[0] - 0.5) < 1e-15);
    CHECK(std::abs(y[1] - 0.5) < 1e-15);
}

TEST_CASE("invalid map specs are rejected with invalid_spec") {
    const Factor h = Factor::hilbert(2);
    const std::vector<std::string> bad{
        R"({"pipeline":[{"op":"rotate"}]})",
        R"({"pipeline":[{"op":"scale","lambda":[1.5,0]}]})",
        R"({"pipeline":[{"op":"scale","lambda":[0.5,0],"extra":1}]})",
        R"({"pipeline":[{"op":"transvection","a":[[1,0],[0,0]]}]})",
        R"({"pipeline":[{"op":"transvection","a":[[0.1,0]]}]})",
        R"({"pipeline":[{"op":"isometry","matrix":[[[1,0],[0,0]],[[0,0],[0.5,0]]]}]})",
        R"({"pipeline":[{"op":"affine","matrix":[[[1,0],[0,0]],[[0,0],[1,0]]],"offset":[[0.5,0],[0,0]]}]})",
        R"({"pipeline":[{"op":"coordwise","parts":[{"type":"mobius","b":[0.2,0]}]}]})",
        R"({"pipeline":{}})",
        R"({"stages":[]})",
    };
    for (const auto& s : bad) {
        CAPTURE(s);
        try {
            selfmap_from_json(json::parse(s), h);
            FAIL("accepted");
        } catch (const Error& e) {
            CHECK(e.code() == ErrorCode::invalid_spec);
        }
    }
}

TEST_CASE("isometries must preserve the triple product") {
    const Factor h = Factor::hilbert(2);
    CMat u(2, 2);
    u << 0.0, 1.0, cplx(0.0, 1.0), 0.0;
    CHECK(automorphism_defect(h, u) < 1e-14);
    SelfMap f(h);
    CHECK_NOTHROW(f.isometry(u));
    CMat shear(2, 2);
    shear << 1.0, 0.3, 0.0, 1.0;
    CHECK(automorphism_defect(h, shear) > 1e-3);
    CHECK_THROWS_AS(f.isometry(shear), Error);
}

TEST_CASE("polydisc permutations and rectangular unitary pairs") {
    const Factor p = Factor::polydisc(2);
    SelfMap f(p);
    f.permutation({1, 0}, {1.0, cplx(0.0, 1.0)});
    CVec z(2);
    z << 0.1, 0.2;
    const Element y = f(Element(p, z));
    CHECK(std::abs(y[0] - 0.2) < 1e-15);
    CHECK(std::abs(y[1] - cplx(0.0, 0.1)) < 1e-15);
    SelfMap g(p);
    CHECK_THROWS_AS(g.permutation({0, 0}, {1.0, 1.0}), Error);

    const Factor r = Factor::rectangular(2, 2);
    SelfMap h(r);
    CMat swap(2, 2);
    swap << 0.0, 1.0, 1.0, 0.0;
    h.unitary_pair(swap, CMat::Identity(2, 2));
    const Element e = h(Element::basis(r, 0) * 0.5);
    CHECK(std::abs(e.as_matrix()(1, 0) - 0.5) < 1e-15);
}

TEST_CASE("closed-ball application accepts the sphere, the open one refuses it") {
    SelfMap f(Factor::polydisc(1));
    f.coordwise({SelfMap::PartMap::mobius(0.5)});
    const Element one = Element::basis(Factor::polydisc(1), 0);
    CHECK(std::abs(f.apply_closed(one)[0] - 1.0) < 1e-15);
    CHECK_THROWS_AS(f(one), Error);
}

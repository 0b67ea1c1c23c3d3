#include "doctest.h"

#include "symdom/boundary.hpp"
#include "symdom/random.hpp"
#include "symdom/triple.hpp"

using namespace symdom;

TEST_CASE("bidisc boundary point (1, 0.3) lies in the face {1} x D") {
    const Factor p = Factor::polydisc(2);
    CVec z(2);
    z << 1.0, 0.3;
    const BoundaryComponent c = component_of_boundary_point(Element(p, z));
    CHECK(element_norm(c.tripotent().element() - Element::basis(p, 0)) < 1e-12);
    CHECK_FALSE(c.is_singleton());
    CVec w(2);
    w << 1.0, cplx(0.0, -1.0);
    CHECK(c.closure_contains(Element(p, w), 1e-9));
    w << 0.9, 0.0;
    CHECK_FALSE(c.closure_contains(Element(p, w), 1e-9));
    CHECK(face_distance(c, Element(p, w)) == doctest::Approx(0.1));
}

TEST_CASE("a unimodular point of the bidisc is its own component") {
    const Factor p = Factor::polydisc(2);
    CVec z(2);
    z << cplx(0.0, 1.0), -1.0;
    const BoundaryComponent c = component_of_boundary_point(Element(p, z));
    CHECK(c.is_singleton());
    CHECK(c.closure_contains(Element(p, z), 1e-12));
}

TEST_CASE("tripotent part of a boundary matrix") {
    const Factor r = Factor::rectangular(2, 2);
    CMat m(2, 2);
    m << 1.0, 0.0, 0.0, 0.5;
    const Element t = tripotent_part(Element::from_matrix(r, m));
    CHECK(element_norm(t - Element::basis(r, 0)) < 1e-10);
}

TEST_CASE("extended Shilov classes") {
    const Factor r = Factor::rectangular(2, 2);
    CHECK_FALSE(in_extended_shilov(classify_tripotent(Element::basis(r, 0))));
    CHECK(in_extended_shilov(classify_tripotent(Element::from_matrix(r, CMat::Identity(2, 2)))));
    const Factor p = Factor::polydisc(3);
    CHECK(in_extended_shilov(classify_tripotent(Element::basis(p, 1))));
    const Factor h = Factor::hilbert(3);
    CHECK(in_extended_shilov(classify_tripotent(Element::basis(h, 2))));
}

TEST_CASE("component JSON round trip") {
    const Factor p = Factor::polydisc(3);
    CVec z(3);
    z << 1.0, cplx(0.0, 1.0), 0.2;
    const BoundaryComponent c = component_of_boundary_point(Element(p, z));
    const BoundaryComponent back = component_from_json(component_to_json(c), p);
    CHECK(back.same_as(c));
    CHECK(component_to_json(back) == component_to_json(c));
}

TEST_CASE("canonical representative: c + P0(c) x") {
    const Factor r = Factor::rectangular(2, 2);
    const BoundaryComponent c(Tripotent::make(Element::basis(r, 0)));
    CMat m(2, 2);
    m << 0.2, 0.3, 0.4, 0.5;
    CMat expected = CMat::Zero(2, 2);
    expected(0, 0) = 1.0;
    expected(1, 1) = 0.5;
    CHECK((c.canonical(Element::from_matrix(r, m)).as_matrix() - expected).norm() < 1e-12);
}

TEST_CASE("random boundary points lie in the closure of their component") {
    for (const Factor& f : {Factor::spin(4), Factor::rectangular(2, 3), Factor::polydisc(3)}) {
        Rng rng(17);
        for (int k = 0; k < 20; ++k) {
            const Element xi = random_unit(f, rng);
            CHECK(face_distance(component_of_boundary_point(xi), xi) < 1e-8);
        }
    }
}

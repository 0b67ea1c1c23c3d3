#include "doctest.h"

#include "oracles.hpp"
#include "symdom/mobius.hpp"
#include "symdom/random.hpp"
#include "symdom/triple.hpp"

using namespace symdom;

TEST_CASE("disc transvection is the Moebius map") {
    const Factor d = Factor::polydisc(1);
    std::mt19937_64 rng(1);
    for (int k = 0; k < 50; ++k) {
        const cplx a = oracle::random_disc(rng, 0.95), z = oracle::random_disc(rng, 0.95);
        const Element got = transvection_apply(Element(d, CVec::Constant(1, a)), Element(d, CVec::Constant(1, z)));
        CHECK(std::abs(got[0] - oracle::disc_mobius(a, z)) < 1e-13);
        CHECK(std::abs(mobius(a, z) - oracle::disc_mobius(a, z)) < 1e-15);
    }
}

TEST_CASE("polydisc transvection acts coordinatewise") {
    const Factor p = Factor::polydisc(3);
    std::mt19937_64 rng(2);
    for (int k = 0; k < 20; ++k) {
        CVec a(3), z(3), expected(3);
        for (int i = 0; i < 3; ++i) {
            a[i] = oracle::random_disc(rng, 0.9);
            z[i] = oracle::random_disc(rng, 0.9);
            expected[i] = oracle::disc_mobius(a[i], z[i]);
        }
        CHECK((transvection_apply(Element(p, a), Element(p, z)).coords() - expected).norm() < 1e-12);
    }
}

TEST_CASE("matrix-ball transvection matches the matrix formula") {
    const Factor r = Factor::rectangular(2, 3);
    Rng rng(3);
    for (int k = 0; k < 20; ++k) {
        const Element a = random_element(r, 0.9, rng), x = random_element(r, 0.9, rng);
        const CMat expected = oracle::matrix_transvection(a.as_matrix(), x.as_matrix());
        CHECK((transvection_apply(a, x).as_matrix() - expected).norm() < 1e-10);
    }
}

TEST_CASE("Kobayashi distance on the disc and polydisc") {
    std::mt19937_64 rng(4);
    const Factor d = Factor::polydisc(1), p = Factor::polydisc(2);
    for (int k = 0; k < 30; ++k) {
        const cplx z = oracle::random_disc(rng, 0.99), w = oracle::random_disc(rng, 0.99);
        const double got = kobayashi(Element(d, CVec::Constant(1, z)), Element(d, CVec::Constant(1, w)));
        CHECK(got == doctest::Approx(oracle::disc_distance(z, w)).epsilon(1e-9));

        CVec a(2), b(2);
        a << z, w;
        b << w, z * 0.5;
        const double expected = std::max(oracle::disc_distance(z, w), oracle::disc_distance(w, z * 0.5));
        CHECK(kobayashi(Element(p, a), Element(p, b)) == doctest::Approx(expected).epsilon(1e-9));
    }
}

TEST_CASE("Hilbert ball: 1 - |g_{-y}(x)|^2 = (1-|x|^2)(1-|y|^2)/|1-<x,y>|^2") {
    const Factor h = Factor::hilbert(4);
    Rng rng(5);
    for (int k = 0; k < 30; ++k) {
        const Element x = random_element(h, 0.95, rng), y = random_element(h, 0.95, rng);
        const double lhs = 1.0 - std::pow(element_norm(transvection_apply(-y, x)), 2);
        const double rhs = (1.0 - x.coords().squaredNorm()) * (1.0 - y.coords().squaredNorm()) /
                           std::norm(1.0 - oracle::ip(x.coords(), y.coords()));
        CHECK(lhs == doctest::Approx(rhs).epsilon(1e-10));
    }
}

TEST_CASE("transvections map the ball into itself and invert") {
    for (const Factor& f : {Factor::spin(4), Factor::rectangular(2, 2), Factor::hilbert(3)}) {
        Rng rng(6);
        for (int k = 0; k < 20; ++k) {
            const Element a = random_element(f, 0.9, rng), x = random_element(f, 0.99, rng);
            const Element y = transvection_apply(a, x);
            CHECK(element_norm(y) < 1.0);
            CHECK(element_norm(transvection_apply(-a, y) - x) < 1e-9);
        }
    }
}

TEST_CASE("closed-ball extension keeps boundary points on the sphere") {
    const Factor p = Factor::polydisc(2);
    const Transvection g(Element::basis(p, 0) * 0.5);
    CVec z(2);
    z << 1.0, 0.3;
    const Element y = g.apply_closed(Element(p, z));
    CHECK(std::abs(y[0] - 1.0) < 1e-14);
    CHECK(std::abs(y[1] - 0.3) < 1e-14);
    CHECK_THROWS_AS(g(Element(p, z)), Error);
}

TEST_CASE("transvection points must lie in the open ball") {
    const Factor h = Factor::hilbert(2);
    CHECK_THROWS_AS(Transvection(Element::basis(h, 1)), Error);
}

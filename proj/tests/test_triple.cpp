#include "doctest.h"

#include "oracles.hpp"
#include "symdom/random.hpp"
#include "symdom/spectral.hpp"
#include "symdom/triple.hpp"
#include "symdom/verify.hpp"

using namespace symdom;

TEST_CASE("rectangular triple product matches the matrix formula") {
    std::mt19937_64 rng(3);
    const Factor f = Factor::rectangular(2, 3);
    for (int k = 0; k < 20; ++k) {
        const CVec a = oracle::random_coords(rng, 6, 1.0), b = oracle::random_coords(rng, 6, 1.0);
        const CVec c = oracle::random_coords(rng, 6, 1.0);
        const Element got = triple_product(Element(f, a), Element(f, b), Element(f, c));
        CHECK((got.coords() - oracle::rect_triple(2, 3, a, b, c)).norm() < 1e-12);
    }
}

TEST_CASE("hilbert and spin triple products match coordinate formulas") {
    std::mt19937_64 rng(4);
    const Factor h = Factor::hilbert(4), s = Factor::spin(5);
    for (int k = 0; k < 20; ++k) {
        const CVec a = oracle::random_coords(rng, 4, 1.0), b = oracle::random_coords(rng, 4, 1.0);
        const CVec c = oracle::random_coords(rng, 4, 1.0);
        CHECK((triple_product(Element(h, a), Element(h, b), Element(h, c)).coords() -
               oracle::hilbert_triple(a, b, c))
                  .norm() < 1e-12);
        const CVec x = oracle::random_coords(rng, 5, 1.0), y = oracle::random_coords(rng, 5, 1.0);
        const CVec z = oracle::random_coords(rng, 5, 1.0);
        CHECK((triple_product(Element(s, x), Element(s, y), Element(s, z)).coords() -
               oracle::spin_triple(x, y, z))
                  .norm() < 1e-12);
    }
}

TEST_CASE("norms match independent formulas") {
    std::mt19937_64 rng(5);
    const Factor r = Factor::rectangular(3, 2), s = Factor::spin(4), h = Factor::hilbert(3), p = Factor::polydisc(3);
    for (int k = 0; k < 50; ++k) {
        const CVec a = oracle::random_coords(rng, 6, 0.7);
        CHECK(element_norm(Element(r, a)) == doctest::Approx(oracle::rect_norm(3, 2, a)).epsilon(1e-12));
        const CVec b = oracle::random_coords(rng, 4, 0.7);
        CHECK(element_norm(Element(s, b)) == doctest::Approx(oracle::spin_norm(b)).epsilon(1e-9));
        const CVec c = oracle::random_coords(rng, 3, 0.7);
        CHECK(element_norm(Element(h, c)) == doctest::Approx(c.norm()).epsilon(1e-14));
        CHECK(element_norm(Element(p, c)) == doctest::Approx(c.cwiseAbs().maxCoeff()).epsilon(1e-14));
    }
}

TEST_CASE("spin norm of nearly rank-one elements stays accurate") {
    const Factor s = Factor::spin(4);
    // a = (1, i + eps, 0, 0) / sqrt 2 is close to a minimal tripotent
    for (double eps : {1e-3, 1e-6, 1e-9}) {
        CVec a(4);
        a << 1.0, cplx(0.0, 1.0 + eps), 0.0, 0.0;
        a /= std::sqrt(2.0);
        CHECK(element_norm(Element(s, a)) == doctest::Approx(oracle::spin_norm(a)).epsilon(1e-12));
    }
}

TEST_CASE("spin factor units: sqrt2 e0 is a unitary tripotent, (e0 + i e1)/sqrt2 is minimal") {
    const Factor s = Factor::spin(4);
    const Element u = Element::basis(s, 0) * std::sqrt(2.0);
    CHECK(element_norm(u) == doctest::Approx(1.0));
    CHECK(element_norm(triple_product(u, u, u) - u) < 1e-14);
    const Element m = (Element::basis(s, 0) + Element::basis(s, 1) * cplx(0, 1)) / std::sqrt(2.0);
    CHECK(element_norm(m) == doctest::Approx(1.0));
    CHECK(element_norm(triple_product(m, m, m) - m) < 1e-14);
}

TEST_CASE("mixing factors is rejected") {
    const Element a = Element::basis(Factor::hilbert(2), 0);
    const Element b = Element::basis(Factor::polydisc(2), 0);
    CHECK_THROWS_AS(triple_product(a, b, a), Error);
}

TEST_CASE("spectral decomposition of a diagonal matrix") {
    const Factor f = Factor::rectangular(2, 2);
    CMat m(2, 2);
    m << 0.3, 0.0, 0.0, cplx(0.0, 0.8);
    const SpectralDecomposition sd = spectral_decomposition(Element::from_matrix(f, m));
    REQUIRE(sd.size() == 2);
    CHECK(sd.terms[0].alpha == doctest::Approx(0.8));
    CHECK(sd.terms[1].alpha == doctest::Approx(0.3));
    CHECK(element_norm(sd.reconstruct(f) - Element::from_matrix(f, m)) < 1e-13);
    CHECK(sd.cluster_count() == 2);
}

TEST_CASE("equal spectral values share a cluster") {
    const Factor f = Factor::polydisc(3);
    CVec c(3);
    c << 0.5, cplx(0.0, -0.5), 0.2;
    const SpectralDecomposition sd = spectral_decomposition(Element(f, c));
    REQUIRE(sd.size() == 3);
    CHECK(sd.cluster_count() == 2);
    CHECK(sd.grouped().front().alpha == doctest::Approx(0.5));
}

TEST_CASE("identity suites pass beyond the acceptance factors") {
    for (const Factor& f : {Factor::rectangular(3, 2), Factor::spin(5),
                            Factor::direct_sum({Factor::hilbert(2), Factor::rectangular(1, 2)})}) {
        CAPTURE(f.describe());
        const VerifyReport r = verify_factor(f, 15, 21);
        for (const auto& c : r.checks) {
            CAPTURE(c.name);
            CHECK(c.worst <= c.tolerance);
        }
    }
}

TEST_CASE("verify rejects a non-positive trial count") {
    CHECK_THROWS_AS(verify_factor(Factor::polydisc(1), 0, 1), Error);
}

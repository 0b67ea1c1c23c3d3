#include "doctest.h"

#include "oracles.hpp"
#include "symdom/opnorm.hpp"
#include "symdom/peirce.hpp"
#include "symdom/triple.hpp"

using namespace symdom;

namespace {

double max_entry(const CMat& m) { return m.cwiseAbs().maxCoeff(); }

}  // namespace

TEST_CASE("Peirce dimensions of standard tripotents") {
    const Factor r = Factor::rectangular(2, 2);
    CHECK(Tripotent::make(Element::basis(r, 0)).peirce_dims() == std::array<int, 3>{1, 2, 1});
    CHECK(Tripotent::make(Element::from_matrix(r, CMat::Identity(2, 2))).peirce_dims() ==
          std::array<int, 3>{4, 0, 0});

    const Factor h = Factor::hilbert(3);
    CHECK(Tripotent::make(Element::basis(h, 0)).peirce_dims() == std::array<int, 3>{1, 2, 0});

    const Factor s = Factor::spin(5);
    const Element m = (Element::basis(s, 0) + Element::basis(s, 1) * cplx(0, 1)) / std::sqrt(2.0);
    CHECK(Tripotent::make(m).peirce_dims() == std::array<int, 3>{1, 3, 1});
    CHECK(Tripotent::make(Element::basis(s, 0) * std::sqrt(2.0)).peirce_dims() == std::array<int, 3>{5, 0, 0});
}

TEST_CASE("tripotent classification flags") {
    const Factor r = Factor::rectangular(2, 3);
    const Tripotent e = Tripotent::make(Element::basis(r, 0));
    CHECK(e.flags().minimal);
    CHECK_FALSE(e.flags().maximal);
    CMat m = CMat::Zero(2, 3);
    m(0, 0) = m(1, 1) = 1.0;
    const Tripotent u = Tripotent::make(Element::from_matrix(r, m));
    CHECK(u.flags().maximal);
    CHECK_FALSE(u.flags().unitary);

    const Factor sq = Factor::rectangular(2, 2);
    const Tripotent v = Tripotent::make(Element::from_matrix(sq, CMat::Identity(2, 2)));
    CHECK(v.flags().unitary);
}

TEST_CASE("non-tripotents are refused") {
    const Factor r = Factor::rectangular(2, 2);
    CHECK_THROWS_AS(Tripotent::make(Element::basis(r, 0) * 0.5), Error);
    try {
        Tripotent::make(Element::basis(r, 0) * 0.5);
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::not_tripotent);
    }
}

TEST_CASE("Peirce projections of E11 in 2x2 matrices are coordinate projections") {
    const Factor r = Factor::rectangular(2, 2);
    const Tripotent e = Tripotent::make(Element::basis(r, 0));
    CVec p2 = CVec::Zero(4), p1 = CVec::Zero(4), p0 = CVec::Zero(4);
    p2 << 1, 0, 0, 0;
    p1 << 0, 1, 1, 0;
    p0 << 0, 0, 0, 1;
    CHECK(max_entry(e.projection(2).complex_matrix() - CMat(p2.asDiagonal())) < 1e-12);
    CHECK(max_entry(e.projection(1).complex_matrix() - CMat(p1.asDiagonal())) < 1e-12);
    CHECK(max_entry(e.projection(0).complex_matrix() - CMat(p0.asDiagonal())) < 1e-12);
}

TEST_CASE("joint Peirce projections on the tridisc") {
    const Factor p = Factor::polydisc(3);
    const JointPeirce jp({Element::basis(p, 0), Element::basis(p, 1) * cplx(0, 1)});
    CHECK(std::abs(jp.matrix(1, 1)(0, 0) - 1.0) < 1e-14);
    CHECK(max_entry(jp.matrix(1, 2)) < 1e-14);
    CHECK(std::abs(jp.matrix(0, 0)(2, 2)) == doctest::Approx(1.0));
    CHECK(std::abs(jp.matrix(0, 1).trace()) < 1e-14);
}

TEST_CASE("non-orthogonal frames are refused") {
    const Factor h = Factor::hilbert(2);
    const Element a = Element::basis(h, 0);
    const Element b = (Element::basis(h, 0) + Element::basis(h, 1)) / std::sqrt(2.0);
    CHECK_THROWS_AS(JointPeirce({a, b}), Error);
}

TEST_CASE("Bergman operator on the disc is multiplication by (1 - z conj w)^2") {
    const Factor d = Factor::polydisc(1);
    std::mt19937_64 rng(8);
    for (int k = 0; k < 10; ++k) {
        const cplx z = oracle::random_disc(rng, 0.9), w = oracle::random_disc(rng, 0.9);
        const CMat b = bergman(Element(d, CVec::Constant(1, z)), Element(d, CVec::Constant(1, w))).complex_matrix();
        CHECK(std::abs(b(0, 0) - std::pow(1.0 - z * std::conj(w), 2)) < 1e-14);
    }
}

TEST_CASE("Bergman operator on a Hilbert ball") {
    const Factor h = Factor::hilbert(3);
    std::mt19937_64 rng(9);
    const CVec z = 0.6 * oracle::random_coords(rng, 3, 1.0).normalized();
    const double r2 = z.squaredNorm();
    REQUIRE(r2 < 1.0);
    const CMat expected = (1.0 - r2) * (CMat::Identity(3, 3) - z * z.adjoint());
    const Element ze(h, z);
    CHECK(max_entry(bergman(ze, ze).complex_matrix() - expected) < 1e-14);
    // ||B(z,z)^{-1/2}|| = 1 / (1 - |z|^2)
    CHECK(op_norm(bergman_power(ze, -0.5)) == doctest::Approx(1.0 / (1.0 - r2)).epsilon(1e-10));
}

TEST_CASE("Bergman operator from joint Peirce data matches the direct one") {
    const Factor r = Factor::rectangular(2, 3);
    const std::vector<Element> frame{Element::basis(r, 0), Element::basis(r, 4)};
    const std::vector<cplx> lambda{0.7, cplx(0.1, -0.4)};
    const Element x = frame[0] * lambda[0] + frame[1] * lambda[1];
    CHECK(max_entry(bergman_via_peirce(frame, lambda).complex_matrix() - bergman(x, x).complex_matrix()) < 1e-13);
}

TEST_CASE("negative Bergman powers refuse the boundary") {
    const Factor d = Factor::polydisc(2);
    CHECK_THROWS_AS(bergman_power(Element::basis(d, 0), -0.5), Error);
}

TEST_CASE("operator norms of complex-linear maps are exact") {
    const Factor h = Factor::hilbert(2);
    CMat m(2, 2);
    m << 2.0, 0.0, 0.0, cplx(0.0, -3.0);
    const OpNormEstimate est = op_norm_estimate(RealLinOp::from_complex(h, m));
    CHECK(est.exact);
    CHECK(est.value == doctest::Approx(3.0));
}

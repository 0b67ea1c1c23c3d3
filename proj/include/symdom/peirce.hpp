#pragma once

#include <array>
#include <vector>

#include "symdom/linop.hpp"
#include "symdom/tolerances.hpp"

namespace symdom {

struct TripotentFlags {
    bool minimal = false;
    bool maximal = false;
    bool structural = false;
    bool unitary = false;
};

/// A validated tripotent with its Peirce projections and dimensions.
class Tripotent {
public:
    /// Throws Error(not_tripotent) unless ||{e,e,e} - e|| and | ||e|| - 1 |
    /// are within tol.tripotent.
    static Tripotent make(const Element& e, const Tolerances& tol = {});

    const Element& element() const { return e_; }
    const Factor& factor() const { return e_.factor(); }
    const TripotentFlags& flags() const { return flags_; }
    /// (dim V2, dim V1, dim V0)
    const std::array<int, 3>& peirce_dims() const { return dims_; }
    /// P_k(e) for k in {0,1,2}.
    const RealLinOp& projection(int k) const;

private:
    Tripotent(Element e, std::array<RealLinOp, 3> p) : e_(std::move(e)), p_(std::move(p)) {}
    Element e_;
    std::array<RealLinOp, 3> p_;  // indexed by k
    std::array<int, 3> dims_{};
    TripotentFlags flags_;
};

double tripotent_defect(const Element& e);
/// Largest entry of the matrices of a[]b and b[]a.
double orthogonality_defect(const Element& a, const Element& b);
/// Complex rank of a complex-linear operator (singular values above threshold).
int numerical_rank(const RealLinOp& t, double threshold);

/// P2 = Q_e^2, P1 = 2(e[]e - Q_e^2), P0 = B(e,e).
RealLinOp peirce_projection(const Tripotent& e, int k);
RealLinOp peirce_projection(const Element& e, int k, const Tolerances& tol = {});

/// All joint Peirce projections P_ij, 0 <= i <= j <= n, of a frame of
/// mutually orthogonal tripotents e_1..e_n (index 0 is the complement).
class JointPeirce {
public:
    explicit JointPeirce(std::vector<Element> frame, const Tolerances& tol = {});

    int size() const { return static_cast<int>(frame_.size()); }
    const std::vector<Element>& frame() const { return frame_; }
    const Factor& factor() const { return factor_; }
    /// Complex matrix of P_ij; the order of i and j does not matter.
    const CMat& matrix(int i, int j) const;
    RealLinOp projection(int i, int j) const;
    /// sum_{0<=i<=j<=n} w_i w_j P_ij, with w_0 supplied by the caller.
    CMat weighted(const std::vector<double>& w) const;

private:
    Factor factor_;
    std::vector<Element> frame_;
    std::vector<CMat> p_;  // packed upper triangle
    int index(int i, int j) const;
};

RealLinOp joint_peirce_projection(const std::vector<Element>& frame, int i, int j,
                                  const Tolerances& tol = {});

/// sum (1-|l_i|^2)(1-|l_j|^2) P_ij with l_0 = 0; equals B(x,x) for x = sum l_i e_i.
RealLinOp bergman_via_peirce(const std::vector<Element>& frame, const std::vector<cplx>& lambda,
                             const Tolerances& tol = {});

/// B(x,x)^r through the spectral decomposition of x; r = 1/2 and r = -1/2 are
/// the cases of interest. Negative powers refuse ||x|| >= 1 - 1e-12.
RealLinOp bergman_power(const Element& x, double exponent, const Tolerances& tol = {});

}  // namespace symdom

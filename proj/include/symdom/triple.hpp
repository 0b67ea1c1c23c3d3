#pragma once

#include "symdom/factor.hpp"
#include "symdom/linop.hpp"

#include <vector>

namespace symdom {

/// {a,b,c}: symmetric and linear in a and c, conjugate-linear in b.
Element triple_product(const Element& a, const Element& b, const Element& c);

/// Coordinate-level triple product; the vectors must have length f.dim().
CVec triple_coords(const Factor& f, const CVec& a, const CVec& b, const CVec& c);

/// The JB*-norm: spectral norm of a matrix, Euclidean norm on a Hilbert
/// space, the spin norm, and the maximum over the parts of a sum.
double element_norm(const Element& a);
double norm_coords(const Factor& f, const CVec& a);

/// Orthonormal basis of the real form {x : x* = x} of a spin factor.
std::vector<CVec> spin_real_basis(const CMat& J);

struct SpinInvariants {
    double q;     // <a,a>
    cplx p;       // <a,a*>
    double disc;  // sqrt(q^2 - |p|^2)
};
SpinInvariants spin_invariants(const Factor& f, const CVec& a);

/// x -> {a,b,x}
RealLinOp box(const Element& a, const Element& b);
/// x -> {a,x,a}
RealLinOp quadratic(const Element& a);
/// x -> x - 2{b,c,x} + {b,{c,x,c},b}
RealLinOp bergman(const Element& b, const Element& c);

}  // namespace symdom

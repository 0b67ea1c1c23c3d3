#pragma once

#include <functional>

#include "symdom/factor.hpp"

namespace symdom {

enum class Linearity { complex_linear, conjugate_linear, real_linear };

const char* to_string(Linearity l);

/// Realification: x in C^n maps to (Re x, Im x) in R^{2n}.
RVec realify(const CVec& x);
CVec complexify(const RVec& x);

/// A real-linear operator on the realified space of a factor. Complex-linear
/// and conjugate-linear maps carry their flag through composition.
class RealLinOp {
public:
    RealLinOp(Factor factor, RMat matrix, Linearity linearity);

    static RealLinOp identity(const Factor& f);
    static RealLinOp zero(const Factor& f);
    static RealLinOp from_complex(const Factor& f, const CMat& m);
    /// Tabulates a real-linear map by its values on e_k and i*e_k.
    static RealLinOp from_map(const Factor& f, Linearity linearity,
                              const std::function<CVec(const CVec&)>& map);

    const Factor& factor() const { return factor_; }
    const RMat& matrix() const { return matrix_; }
    Linearity linearity() const { return linearity_; }

    Element apply(const Element& x) const;
    Element operator()(const Element& x) const { return apply(x); }
    CVec apply(const CVec& x) const;

    /// Composition (*this) o other.
    RealLinOp operator*(const RealLinOp& other) const;
    RealLinOp operator+(const RealLinOp& other) const;
    RealLinOp operator-(const RealLinOp& other) const;
    RealLinOp operator*(double s) const;
    /// Left multiplication by a complex scalar; keeps the linearity flag.
    RealLinOp scaled(cplx s) const;

    /// Defect of commuting (or anticommuting) with multiplication by i.
    double complex_linearity_defect() const;
    double conjugate_linearity_defect() const;

    /// The complex matrix of a complex-linear operator.
    CMat complex_matrix() const;

private:
    Factor factor_;
    RMat matrix_;
    Linearity linearity_;
};

inline RealLinOp operator*(double s, const RealLinOp& t) { return t * s; }

}  // namespace symdom

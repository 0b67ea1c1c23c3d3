#pragma once

#include <memory>
#include <string>
#include <vector>

#include "symdom/types.hpp"

namespace symdom {

/// A finite-dimensional JB*-triple: rectangular matrices, a spin factor, a
/// Hilbert space, or a flattened l-infinity sum of those. Cheap to copy; the
/// description is shared and immutable.
class Factor {
public:
    enum class Kind { rectangular, spin, hilbert, direct_sum };

    static Factor rectangular(int rows, int cols);
    /// Spin factor on C^n with the coordinatewise conjugation x* = conj(x).
    static Factor spin(int dim);
    /// Spin factor with x* = J conj(x); J must be symmetric and unitary.
    static Factor spin(int dim, const CMat& conjugation);
    static Factor hilbert(int dim);
    static Factor polydisc(int d);
    /// Nested sums are flattened; a sum with a single part is that part.
    static Factor direct_sum(const std::vector<Factor>& parts);

    Kind kind() const;
    int dim() const;
    int rank() const;
    int rows() const;
    int cols() const;
    const CMat& conjugation() const;
    /// Parts of a direct sum (never sums themselves) and their coordinate offsets.
    const std::vector<Factor>& parts() const;
    const std::vector<int>& offsets() const;

    /// Direct sum of Hilbert(1) parts, or Hilbert(1) itself.
    bool is_polydisc() const;
    bool is_abelian() const;
    std::string describe() const;

    bool operator==(const Factor& other) const;
    bool operator!=(const Factor& other) const { return !(*this == other); }

private:
    struct Node;
    explicit Factor(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
    std::shared_ptr<const Node> node_;
};

/// Coordinates of a point of a factor's space. Matrices are stored row-major.
class Element {
public:
    Element(Factor factor, CVec coords);

    static Element zero(const Factor& f);
    static Element basis(const Factor& f, int k);
    static Element from_matrix(const Factor& f, const CMat& m);

    const Factor& factor() const { return factor_; }
    const CVec& coords() const { return coords_; }
    int dim() const { return static_cast<int>(coords_.size()); }
    cplx operator[](int k) const { return coords_[k]; }
    CMat as_matrix() const;

    /// Coordinates of part `p` of a direct sum (the whole vector otherwise).
    CVec part(int p) const;

    Element operator+(const Element& o) const;
    Element operator-(const Element& o) const;
    Element operator-() const;
    Element operator*(cplx s) const;
    Element operator*(double s) const;
    Element operator/(double s) const;

private:
    Factor factor_;
    CVec coords_;
};

inline Element operator*(cplx s, const Element& e) { return e * s; }
inline Element operator*(double s, const Element& e) { return e * s; }

void require_same_factor(const Element& a, const Element& b);

/// Euclidean (coordinate) inner product, linear in the first argument.
cplx inner(const Element& a, const Element& b);
/// Euclidean coordinate norm; not the triple norm.
double coord_norm(const Element& a);
/// The spin conjugation a -> a*; requires a spin factor.
Element star(const Element& a);

}  // namespace symdom

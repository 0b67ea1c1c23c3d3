#include "symdom/factor.hpp"

#include <sstream>

namespace symdom {

struct Factor::Node {
    Kind kind = Kind::hilbert;
    int rows = 0;
    int cols = 0;
    int dim = 0;
    int rank = 0;
    CMat conjugation;
    std::vector<Factor> parts;
    std::vector<int> offsets;
};

Factor Factor::rectangular(int rows, int cols) {
    if (rows < 1 || cols < 1)
        throw Error(ErrorCode::invalid_spec, "rectangular factor needs positive rows and cols");
    auto n = std::make_shared<Node>();
    n->kind = Kind::rectangular;
    n->rows = rows;
    n->cols = cols;
    n->dim = rows * cols;
    n->rank = std::min(rows, cols);
    return Factor(n);
}

Factor Factor::spin(int dim) { return spin(dim, CMat::Identity(dim, dim)); }

Factor Factor::spin(int dim, const CMat& conjugation) {
    if (dim < 3) throw Error(ErrorCode::invalid_spec, "spin factor needs dim >= 3");
    if (conjugation.rows() != dim || conjugation.cols() != dim)
        throw Error(ErrorCode::invalid_spec, "spin conjugation has wrong shape");
    const CMat& J = conjugation;
    const double unitary = (J.adjoint() * J - CMat::Identity(dim, dim)).norm();
    const double involution = (J * J.conjugate() - CMat::Identity(dim, dim)).norm();
    if (unitary > 1e-10 || involution > 1e-10)
        throw Error(ErrorCode::invalid_spec,
                    "spin conjugation must be unitary with J*conj(J) = I");
    auto n = std::make_shared<Node>();
    n->kind = Kind::spin;
    n->dim = dim;
    n->rank = 2;
    n->conjugation = J;
    return Factor(n);
}

Factor Factor::hilbert(int dim) {
    if (dim < 1) throw Error(ErrorCode::invalid_spec, "hilbert factor needs dim >= 1");
    auto n = std::make_shared<Node>();
    n->kind = Kind::hilbert;
    n->dim = dim;
    n->rank = 1;
    return Factor(n);
}

Factor Factor::polydisc(int d) {
    if (d < 1) throw Error(ErrorCode::invalid_spec, "polydisc needs d >= 1");
    return direct_sum(std::vector<Factor>(static_cast<std::size_t>(d), hilbert(1)));
}

Factor Factor::direct_sum(const std::vector<Factor>& parts) {
    std::vector<Factor> flat;
    for (const auto& p : parts) {
        if (p.kind() == Kind::direct_sum)
            flat.insert(flat.end(), p.parts().begin(), p.parts().end());
        else
            flat.push_back(p);
    }
    if (flat.empty()) throw Error(ErrorCode::invalid_spec, "direct sum needs at least one part");
    if (flat.size() == 1) return flat.front();
    auto n = std::make_shared<Node>();
    n->kind = Kind::direct_sum;
    for (const auto& p : flat) {
        n->offsets.push_back(n->dim);
        n->dim += p.dim();
        n->rank += p.rank();
    }
    n->parts = std::move(flat);
    return Factor(n);
}

Factor::Kind Factor::kind() const { return node_->kind; }
int Factor::dim() const { return node_->dim; }
int Factor::rank() const { return node_->rank; }
int Factor::rows() const { return node_->rows; }
int Factor::cols() const { return node_->cols; }
const CMat& Factor::conjugation() const { return node_->conjugation; }
const std::vector<Factor>& Factor::parts() const { return node_->parts; }
const std::vector<int>& Factor::offsets() const { return node_->offsets; }

bool Factor::is_polydisc() const {
    if (kind() == Kind::hilbert) return dim() == 1;
    if (kind() != Kind::direct_sum) return false;
    for (const auto& p : parts())
        if (p.kind() != Kind::hilbert || p.dim() != 1) return false;
    return true;
}

bool Factor::is_abelian() const { return is_polydisc(); }

std::string Factor::describe() const {
    std::ostringstream os;
    switch (kind()) {
    case Kind::rectangular: os << "Rectangular(" << rows() << "," << cols() << ")"; break;
    case Kind::spin: os << "Spin(" << dim() << ")"; break;
    case Kind::hilbert: os << "Hilbert(" << dim() << ")"; break;
    case Kind::direct_sum:
        if (is_polydisc()) {
            os << "Polydisc(" << dim() << ")";
        } else {
            os << "Sum(";
            for (std::size_t i = 0; i < parts().size(); ++i)
                os << (i ? "," : "") << parts()[i].describe();
            os << ")";
        }
        break;
    }
    return os.str();
}

bool Factor::operator==(const Factor& other) const {
    if (node_ == other.node_) return true;
    if (kind() != other.kind() || dim() != other.dim()) return false;
    switch (kind()) {
    case Kind::rectangular: return rows() == other.rows() && cols() == other.cols();
    case Kind::spin: return (conjugation() - other.conjugation()).norm() <= 1e-12;
    case Kind::hilbert: return true;
    case Kind::direct_sum:
        if (parts().size() != other.parts().size()) return false;
        for (std::size_t i = 0; i < parts().size(); ++i)
            if (parts()[i] != other.parts()[i]) return false;
        return true;
    }
    return false;
}

Element::Element(Factor factor, CVec coords) : factor_(std::move(factor)), coords_(std::move(coords)) {
    if (coords_.size() != factor_.dim())
        throw Error(ErrorCode::invalid_argument,
                    "element has " + std::to_string(coords_.size()) + " coordinates, " +
                        factor_.describe() + " needs " + std::to_string(factor_.dim()));
}

Element Element::zero(const Factor& f) { return Element(f, CVec::Zero(f.dim())); }

Element Element::basis(const Factor& f, int k) {
    if (k < 0 || k >= f.dim()) throw Error(ErrorCode::invalid_argument, "basis index out of range");
    CVec v = CVec::Zero(f.dim());
    v[k] = 1.0;
    return Element(f, v);
}

Element Element::from_matrix(const Factor& f, const CMat& m) {
    if (f.kind() != Factor::Kind::rectangular || m.rows() != f.rows() || m.cols() != f.cols())
        throw Error(ErrorCode::invalid_argument, "matrix does not fit " + f.describe());
    CVec v(f.dim());
    for (int i = 0; i < f.rows(); ++i)
        for (int j = 0; j < f.cols(); ++j) v[i * f.cols() + j] = m(i, j);
    return Element(f, v);
}

CMat Element::as_matrix() const {
    if (factor_.kind() != Factor::Kind::rectangular)
        throw Error(ErrorCode::invalid_argument, "as_matrix needs a rectangular factor");
    CMat m(factor_.rows(), factor_.cols());
    for (int i = 0; i < factor_.rows(); ++i)
        for (int j = 0; j < factor_.cols(); ++j) m(i, j) = coords_[i * factor_.cols() + j];
    return m;
}

CVec Element::part(int p) const {
    if (factor_.kind() != Factor::Kind::direct_sum) return coords_;
    const auto& parts = factor_.parts();
    return coords_.segment(factor_.offsets().at(p), parts.at(p).dim());
}

void require_same_factor(const Element& a, const Element& b) {
    if (a.factor() != b.factor())
        throw Error(ErrorCode::factor_mismatch,
                    "elements of " + a.factor().describe() + " and " + b.factor().describe());
}

Element Element::operator+(const Element& o) const {
    require_same_factor(*this, o);
    return Element(factor_, coords_ + o.coords_);
}

Element Element::operator-(const Element& o) const {
    require_same_factor(*this, o);
    return Element(factor_, coords_ - o.coords_);
}

Element Element::operator-() const { return Element(factor_, -coords_); }
Element Element::operator*(cplx s) const { return Element(factor_, coords_ * s); }
Element Element::operator*(double s) const { return Element(factor_, coords_ * s); }
Element Element::operator/(double s) const { return Element(factor_, coords_ / s); }

cplx inner(const Element& a, const Element& b) {
    require_same_factor(a, b);
    return b.coords().dot(a.coords());
}

double coord_norm(const Element& a) { return a.coords().norm(); }

Element star(const Element& a) {
    if (a.factor().kind() != Factor::Kind::spin)
        throw Error(ErrorCode::invalid_argument, "conjugation is defined on spin factors only");
    return Element(a.factor(), a.factor().conjugation() * a.coords().conjugate());
}

}  // namespace symdom

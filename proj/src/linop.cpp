#include "symdom/linop.hpp"

namespace symdom {

const char* to_string(Linearity l) {
    switch (l) {
    case Linearity::complex_linear: return "complex-linear";
    case Linearity::conjugate_linear: return "conjugate-linear";
    case Linearity::real_linear: return "real-linear";
    }
    return "unknown";
}

RVec realify(const CVec& x) {
    const Eigen::Index n = x.size();
    RVec r(2 * n);
    r.head(n) = x.real();
    r.tail(n) = x.imag();
    return r;
}

CVec complexify(const RVec& x) {
    const Eigen::Index n = x.size() / 2;
    CVec c(n);
    for (Eigen::Index k = 0; k < n; ++k) c[k] = cplx(x[k], x[n + k]);
    return c;
}

namespace {

// Realified multiplication by i.
RMat i_matrix(int n) {
    RMat j = RMat::Zero(2 * n, 2 * n);
    j.topRightCorner(n, n) = -RMat::Identity(n, n);
    j.bottomLeftCorner(n, n) = RMat::Identity(n, n);
    return j;
}

}  // namespace

RealLinOp::RealLinOp(Factor factor, RMat matrix, Linearity linearity)
    : factor_(std::move(factor)), matrix_(std::move(matrix)), linearity_(linearity) {
    const Eigen::Index n = 2 * factor_.dim();
    if (matrix_.rows() != n || matrix_.cols() != n)
        throw Error(ErrorCode::invalid_argument, "operator matrix does not fit the factor");
}

RealLinOp RealLinOp::identity(const Factor& f) {
    return RealLinOp(f, RMat::Identity(2 * f.dim(), 2 * f.dim()), Linearity::complex_linear);
}

RealLinOp RealLinOp::zero(const Factor& f) {
    return RealLinOp(f, RMat::Zero(2 * f.dim(), 2 * f.dim()), Linearity::complex_linear);
}

RealLinOp RealLinOp::from_complex(const Factor& f, const CMat& m) {
    const int n = f.dim();
    if (m.rows() != n || m.cols() != n)
        throw Error(ErrorCode::invalid_argument, "complex matrix does not fit the factor");
    RMat r(2 * n, 2 * n);
    r.topLeftCorner(n, n) = m.real();
    r.topRightCorner(n, n) = -m.imag();
    r.bottomLeftCorner(n, n) = m.imag();
    r.bottomRightCorner(n, n) = m.real();
    return RealLinOp(f, r, Linearity::complex_linear);
}

RealLinOp RealLinOp::from_map(const Factor& f, Linearity linearity,
                              const std::function<CVec(const CVec&)>& map) {
    const int n = f.dim();
    RMat r(2 * n, 2 * n);
    CVec e = CVec::Zero(n);
    for (int k = 0; k < n; ++k) {
        e[k] = 1.0;
        r.col(k) = realify(map(e));
        e[k] = cplx(0.0, 1.0);
        r.col(n + k) = realify(map(e));
        e[k] = 0.0;
    }
    return RealLinOp(f, r, linearity);
}

Element RealLinOp::apply(const Element& x) const {
    if (x.factor() != factor_)
        throw Error(ErrorCode::factor_mismatch, "operator applied to an element of another factor");
    return Element(factor_, apply(x.coords()));
}

CVec RealLinOp::apply(const CVec& x) const { return complexify(matrix_ * realify(x)); }

RealLinOp RealLinOp::operator*(const RealLinOp& other) const {
    if (other.factor_ != factor_) throw Error(ErrorCode::factor_mismatch, "composing operators of different factors");
    Linearity l = Linearity::real_linear;
    if (linearity_ != Linearity::real_linear && other.linearity_ != Linearity::real_linear)
        l = (linearity_ == other.linearity_) ? Linearity::complex_linear : Linearity::conjugate_linear;
    return RealLinOp(factor_, matrix_ * other.matrix_, l);
}

RealLinOp RealLinOp::operator+(const RealLinOp& other) const {
    if (other.factor_ != factor_) throw Error(ErrorCode::factor_mismatch, "adding operators of different factors");
    const Linearity l = (linearity_ == other.linearity_) ? linearity_ : Linearity::real_linear;
    return RealLinOp(factor_, matrix_ + other.matrix_, l);
}

RealLinOp RealLinOp::operator-(const RealLinOp& other) const { return *this + other * -1.0; }

RealLinOp RealLinOp::operator*(double s) const { return RealLinOp(factor_, matrix_ * s, linearity_); }

RealLinOp RealLinOp::scaled(cplx s) const {
    const int n = factor_.dim();
    const RMat m = s.real() * RMat::Identity(2 * n, 2 * n) + s.imag() * i_matrix(n);
    return RealLinOp(factor_, m * matrix_, linearity_);
}

double RealLinOp::complex_linearity_defect() const {
    const RMat j = i_matrix(factor_.dim());
    return (matrix_ * j - j * matrix_).norm();
}

double RealLinOp::conjugate_linearity_defect() const {
    const RMat j = i_matrix(factor_.dim());
    return (matrix_ * j + j * matrix_).norm();
}

CMat RealLinOp::complex_matrix() const {
    if (linearity_ != Linearity::complex_linear)
        throw Error(ErrorCode::invalid_argument, "complex matrix requested for a non complex-linear operator");
    const int n = factor_.dim();
    CMat m(n, n);
    m.real() = matrix_.topLeftCorner(n, n);
    m.imag() = matrix_.bottomLeftCorner(n, n);
    return m;
}

}  // namespace symdom

#include "symdom/triple.hpp"

#include <cmath>

namespace symdom {

std::vector<CVec> spin_real_basis(const CMat& J) {
    const int n = static_cast<int>(J.rows());
    std::vector<CVec> basis;
    for (int k = 0; k < n && static_cast<int>(basis.size()) < n; ++k) {
        for (int variant = 0; variant < 2; ++variant) {
            CVec b = CVec::Zero(n);
            b[k] = variant == 0 ? cplx(1.0, 0.0) : cplx(0.0, 1.0);
            CVec w = b + J * b.conjugate();
            for (const auto& v : basis) w -= v.dot(w).real() * v;
            const double nw = w.norm();
            if (nw > 0.5) basis.push_back(w / nw);
        }
    }
    return basis;
}

SpinInvariants spin_invariants(const Factor& f, const CVec& a) {
    const CMat& J = f.conjugation();
    SpinInvariants out;
    out.q = a.squaredNorm();
    out.p = (J * a.conjugate()).dot(a);
    // q^2 - |p|^2 = 4 |x|^2 |y|^2 - 4 (x.y)^2 for the real and imaginary parts
    // x, y of the real-form coordinates; Lagrange's identity avoids the
    // cancellation near the maximal tripotents.
    CVec c = a;
    if (!J.isIdentity(0.0)) {
        const auto basis = spin_real_basis(J);
        for (std::size_t k = 0; k < basis.size(); ++k) c[static_cast<Eigen::Index>(k)] = basis[k].dot(a);
    }
    double s = 0.0;
    for (Eigen::Index k = 0; k < c.size(); ++k)
        for (Eigen::Index l = k + 1; l < c.size(); ++l) {
            const double m = c[k].real() * c[l].imag() - c[l].real() * c[k].imag();
            s += m * m;
        }
    out.disc = 2.0 * std::sqrt(s);
    return out;
}


namespace {

using RowMat = Eigen::Matrix<cplx, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

void triple_segment(const Factor& f, const cplx* a, const cplx* b, const cplx* c, cplx* out) {
    const int n = f.dim();
    switch (f.kind()) {
    case Factor::Kind::rectangular: {
        const int r = f.rows();
        const int k = f.cols();
        Eigen::Map<const RowMat> A(a, r, k), B(b, r, k), C(c, r, k);
        Eigen::Map<RowMat> O(out, r, k);
        O = 0.5 * (A * B.adjoint() * C + C * B.adjoint() * A);
        return;
    }
    case Factor::Kind::hilbert: {
        Eigen::Map<const CVec> A(a, n), B(b, n), C(c, n);
        Eigen::Map<CVec> O(out, n);
        const cplx ab = B.dot(A);
        const cplx cb = B.dot(C);
        O = 0.5 * (ab * C + cb * A);
        return;
    }
    case Factor::Kind::spin: {
        Eigen::Map<const CVec> X(a, n), Y(b, n), Z(c, n);
        Eigen::Map<CVec> O(out, n);
        const CMat& J = f.conjugation();
        const CVec ystar = J * Y.conjugate();
        const CVec zstar = J * Z.conjugate();
        const cplx xy = Y.dot(X);
        const cplx zy = Y.dot(Z);
        const cplx xz = zstar.dot(X);
        O = 0.5 * (xy * Z + zy * X - xz * ystar);
        return;
    }
    case Factor::Kind::direct_sum: {
        const auto& parts = f.parts();
        const auto& off = f.offsets();
        for (std::size_t p = 0; p < parts.size(); ++p)
            triple_segment(parts[p], a + off[p], b + off[p], c + off[p], out + off[p]);
        return;
    }
    }
}

double norm_segment(const Factor& f, const cplx* a) {
    const int n = f.dim();
    switch (f.kind()) {
    case Factor::Kind::rectangular: {
        Eigen::Map<const RowMat> A(a, f.rows(), f.cols());
        const CMat m = A;
        Eigen::JacobiSVD<CMat> svd(m);
        return svd.singularValues()(0);
    }
    case Factor::Kind::hilbert: return Eigen::Map<const CVec>(a, n).norm();
    case Factor::Kind::spin: {
        const SpinInvariants inv = spin_invariants(f, Eigen::Map<const CVec>(a, n));
        return std::sqrt(0.5 * (inv.q + inv.disc));
    }
    case Factor::Kind::direct_sum: {
        double m = 0.0;
        const auto& parts = f.parts();
        for (std::size_t p = 0; p < parts.size(); ++p)
            m = std::max(m, norm_segment(parts[p], a + f.offsets()[p]));
        return m;
    }
    }
    return 0.0;
}

}  // namespace

CVec triple_coords(const Factor& f, const CVec& a, const CVec& b, const CVec& c) {
    CVec out(f.dim());
    triple_segment(f, a.data(), b.data(), c.data(), out.data());
    return out;
}

Element triple_product(const Element& a, const Element& b, const Element& c) {
    require_same_factor(a, b);
    require_same_factor(a, c);
    return Element(a.factor(), triple_coords(a.factor(), a.coords(), b.coords(), c.coords()));
}

double norm_coords(const Factor& f, const CVec& a) { return norm_segment(f, a.data()); }

double element_norm(const Element& a) { return norm_coords(a.factor(), a.coords()); }

RealLinOp box(const Element& a, const Element& b) {
    require_same_factor(a, b);
    const Factor& f = a.factor();
    const int n = f.dim();
    CMat m(n, n);
    CVec e = CVec::Zero(n);
    for (int k = 0; k < n; ++k) {
        e[k] = 1.0;
        m.col(k) = triple_coords(f, a.coords(), b.coords(), e);
        e[k] = 0.0;
    }
    return RealLinOp::from_complex(f, m);
}

RealLinOp quadratic(const Element& a) {
    const Factor& f = a.factor();
    const CVec av = a.coords();
    return RealLinOp::from_map(f, Linearity::conjugate_linear,
                               [&](const CVec& x) { return triple_coords(f, av, x, av); });
}

RealLinOp bergman(const Element& b, const Element& c) {
    require_same_factor(b, c);
    const Factor& f = b.factor();
    const int n = f.dim();
    CMat m(n, n);
    CVec e = CVec::Zero(n);
    for (int k = 0; k < n; ++k) {
        e[k] = 1.0;
        const CVec cxc = triple_coords(f, c.coords(), e, c.coords());
        m.col(k) = e - 2.0 * triple_coords(f, b.coords(), c.coords(), e) +
                   triple_coords(f, b.coords(), cxc, b.coords());
        e[k] = 0.0;
    }
    return RealLinOp::from_complex(f, m);
}

}  // namespace symdom

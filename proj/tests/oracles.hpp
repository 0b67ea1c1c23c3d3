#pragma once

// Reference formulas written directly from coordinates, independent of the
// library's own evaluation paths.

#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include <Eigen/Dense>

#include "symdom/factor.hpp"

namespace oracle {

using cplx = std::complex<double>;
using CMat = Eigen::MatrixXcd;
using CVec = Eigen::VectorXcd;

inline cplx random_disc(std::mt19937_64& rng, double cap) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    return std::polar(cap * std::sqrt(u(rng)), 2.0 * M_PI * u(rng));
}

inline CVec random_coords(std::mt19937_64& rng, int n, double scale) {
    std::normal_distribution<double> g(0.0, scale);
    CVec v(n);
    for (int k = 0; k < n; ++k) v[k] = cplx(g(rng), g(rng));
    return v;
}

// <a, b> linear in a
inline cplx ip(const CVec& a, const CVec& b) {
    cplx s = 0.0;
    for (int k = 0; k < a.size(); ++k) s += a[k] * std::conj(b[k]);
    return s;
}

// (1/2)(A B* C + C B* A) on row-major r x c coordinates.
inline CVec rect_triple(int r, int c, const CVec& a, const CVec& b, const CVec& z) {
    auto at = [c](const CVec& v, int i, int j) { return v[i * c + j]; };
    CVec out = CVec::Zero(r * c);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j) {
            cplx s = 0.0;
            for (int k = 0; k < c; ++k)
                for (int l = 0; l < r; ++l)
                    s += at(a, i, k) * std::conj(at(b, l, k)) * at(z, l, j) +
                         at(z, i, k) * std::conj(at(b, l, k)) * at(a, l, j);
            out[i * c + j] = 0.5 * s;
        }
    return out;
}

// (1/2)(<a,b> z + <z,b> a)
inline CVec hilbert_triple(const CVec& a, const CVec& b, const CVec& z) {
    return 0.5 * (ip(a, b) * z + ip(z, b) * a);
}

// (1/2)(<x,y> z + <z,y> x - <x, conj z> conj y) for the standard conjugation.
inline CVec spin_triple(const CVec& x, const CVec& y, const CVec& z) {
    cplx xz = 0.0;
    for (int k = 0; k < x.size(); ++k) xz += x[k] * z[k];
    return 0.5 * (ip(x, y) * z + ip(z, y) * x - xz * y.conjugate());
}

// Largest singular value from the eigenvalues of A A*.
inline double rect_norm(int r, int c, const CVec& a) {
    CMat m(r, c);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j) m(i, j) = a[i * c + j];
    Eigen::SelfAdjointEigenSolver<CMat> es(m * m.adjoint());
    return std::sqrt(std::max(0.0, es.eigenvalues().maxCoeff()));
}

// ||a||^2 = (q + sqrt(q^2 - |p|^2)) / 2 in long double.
inline double spin_norm(const CVec& a) {
    long double q = 0.0L;
    std::complex<long double> p = 0.0L;
    for (int k = 0; k < a.size(); ++k) {
        q += std::norm(std::complex<long double>(a[k]));
        p += std::complex<long double>(a[k]) * std::complex<long double>(a[k]);
    }
    const long double d = std::sqrt(std::max(0.0L, q * q - std::norm(p)));
    return static_cast<double>(std::sqrt((q + d) / 2.0L));
}

inline cplx disc_mobius(cplx a, cplx z) { return (z + a) / (1.0 + std::conj(a) * z); }

inline double disc_distance(cplx z, cplx w) { return std::atanh(std::abs((z - w) / (1.0 - z * std::conj(w)))); }

// |1 - z|^2 / (1 - |z|^2)
inline double disc_F(cplx z) { return std::norm(1.0 - z) / (1.0 - std::norm(z)); }

// Matrix-ball transvection (I - AA*)^{-1/2} (X + A)(I + A*X)^{-1} (I - A*A)^{1/2}.
inline CMat matrix_transvection(const CMat& a, const CMat& x) {
    auto power = [](const CMat& h, double r) {
        Eigen::SelfAdjointEigenSolver<CMat> es(h);
        CVec d(es.eigenvalues().size());
        for (Eigen::Index k = 0; k < d.size(); ++k) d[k] = std::pow(es.eigenvalues()[k], r);
        return CMat(es.eigenvectors() * d.asDiagonal() * es.eigenvectors().adjoint());
    };
    const int r = static_cast<int>(a.rows()), c = static_cast<int>(a.cols());
    const CMat left = power(CMat::Identity(r, r) - a * a.adjoint(), -0.5);
    const CMat right = power(CMat::Identity(c, c) - a.adjoint() * a, 0.5);
    return left * (x + a) * (CMat::Identity(c, c) + a.adjoint() * x).inverse() * right;
}

}  // namespace oracle

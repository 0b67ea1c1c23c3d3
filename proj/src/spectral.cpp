#include "symdom/spectral.hpp"

#include <algorithm>
#include <cmath>

#include "symdom/triple.hpp"

namespace symdom {

namespace {

struct Raw {
    double alpha;
    CVec e;
};

using RowMat = Eigen::Matrix<cplx, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

std::vector<Raw> rect_terms(const Factor& f, const CVec& a, double zero) {
    const CMat m = Eigen::Map<const RowMat>(a.data(), f.rows(), f.cols());
    Eigen::JacobiSVD<CMat> svd(m, Eigen::ComputeThinU | Eigen::ComputeThinV);
    std::vector<Raw> out;
    const auto& s = svd.singularValues();
    for (Eigen::Index i = 0; i < s.size(); ++i) {
        if (s[i] <= zero) continue;
        const RowMat e = svd.matrixU().col(i) * svd.matrixV().col(i).adjoint();
        out.push_back({s[i], Eigen::Map<const CVec>(e.data(), e.size())});
    }
    return out;
}

std::vector<Raw> spin_terms(const Factor& f, const CVec& a, double zero, double cluster) {
    const CMat& J = f.conjugation();
    const CVec astar = J * a.conjugate();
    const SpinInvariants inv = spin_invariants(f, a);
    const cplx p = inv.p;
    const double ap = std::abs(p);
    const double a1 = std::sqrt(0.5 * (inv.q + inv.disc));
    if (a1 <= zero) return {};
    const double a2 = ap / (2.0 * a1);
    const cplx lambda = ap > 0.0 ? p / ap : cplx(1.0, 0.0);

    if (inv.disc > cluster * a1 * (a1 + a2)) {
        const double d = inv.disc;
        const CVec e = (a1 * a - a2 * lambda * astar) / d;
        std::vector<Raw> out{{a1, e}};
        if (a2 > zero) out.push_back({a2, (a1 * lambda * astar - a2 * a) / d});
        return out;
    }

    // a = alpha*u with u maximal and u* = conj(lambda) u; split u = e + lambda e*.
    const double alpha = 0.5 * (a1 + a2);
    const CVec u = a / alpha;
    const cplx half = std::polar(1.0, 0.5 * std::arg(lambda));
    CVec r0 = u / half;
    r0 = 0.5 * (r0 + J * r0.conjugate());
    const double nr0 = r0.norm();
    CVec r1;
    for (const auto& b : spin_real_basis(J)) {
        CVec w = b - (r0.dot(b).real() / (nr0 * nr0)) * r0;
        if (w.norm() > 0.5) {
            r1 = w * (std::sqrt(2.0) / w.norm());
            break;
        }
    }
    const CVec v = cplx(0.0, 1.0) * half * r1;
    return {{alpha, 0.5 * (u + v)}, {alpha, 0.5 * (u - v)}};
}

void collect(const Factor& f, const CVec& a, int offset, int total, double zero, double cluster,
             std::vector<Raw>& out) {
    auto embed = [&](std::vector<Raw> terms) {
        for (auto& t : terms) {
            CVec full = CVec::Zero(total);
            full.segment(offset, t.e.size()) = t.e;
            out.push_back({t.alpha, std::move(full)});
        }
    };
    switch (f.kind()) {
    case Factor::Kind::rectangular: embed(rect_terms(f, a, zero)); break;
    case Factor::Kind::hilbert: {
        const double n = a.norm();
        if (n > zero) embed({{n, a / n}});
        break;
    }
    case Factor::Kind::spin: embed(spin_terms(f, a, zero, cluster)); break;
    case Factor::Kind::direct_sum:
        for (std::size_t p = 0; p < f.parts().size(); ++p) {
            const Factor& part = f.parts()[p];
            collect(part, a.segment(f.offsets()[p], part.dim()), offset + f.offsets()[p], total,
                    zero, cluster, out);
        }
        break;
    }
}

}  // namespace

bool lex_precedes(const CVec& a, const CVec& b) {
    constexpr double eps = 1e-12;
    for (Eigen::Index k = 0; k < a.size(); ++k) {
        if (std::abs(a[k].real() - b[k].real()) > eps) return a[k].real() > b[k].real();
        if (std::abs(a[k].imag() - b[k].imag()) > eps) return a[k].imag() > b[k].imag();
    }
    return false;
}

SpectralDecomposition spectral_decomposition(const Element& a, const Tolerances& tol) {
    const Factor& f = a.factor();
    const double scale = std::max(1.0, a.coords().cwiseAbs().maxCoeff());
    const double zero = 1e-14 * scale * std::max(1, f.dim());
    std::vector<Raw> raw;
    collect(f, a.coords(), 0, f.dim(), zero, tol.cluster, raw);
    std::stable_sort(raw.begin(), raw.end(), [](const Raw& x, const Raw& y) { return x.alpha > y.alpha; });

    SpectralDecomposition out;
    if (raw.empty()) return out;
    const double gap = tol.cluster * raw.front().alpha;
    std::size_t start = 0;
    int cluster = 0;
    while (start < raw.size()) {
        std::size_t end = start + 1;
        while (end < raw.size() && raw[end - 1].alpha - raw[end].alpha <= gap) ++end;
        std::sort(raw.begin() + static_cast<std::ptrdiff_t>(start), raw.begin() + static_cast<std::ptrdiff_t>(end),
                  [](const Raw& x, const Raw& y) { return lex_precedes(x.e, y.e); });
        for (std::size_t i = start; i < end; ++i)
            out.terms.push_back({raw[i].alpha, Element(f, raw[i].e), cluster});
        ++cluster;
        start = end;
    }
    return out;
}

std::vector<SpectralTerm> SpectralDecomposition::grouped() const {
    std::vector<SpectralTerm> out;
    std::vector<int> counts;
    for (const auto& t : terms) {
        if (!out.empty() && out.back().cluster == t.cluster) {
            out.back().e = out.back().e + t.e;
            out.back().alpha += t.alpha;
            ++counts.back();
        } else {
            out.push_back(t);
            counts.push_back(1);
        }
    }
    for (std::size_t i = 0; i < out.size(); ++i) out[i].alpha /= counts[i];
    return out;
}

Element SpectralDecomposition::reconstruct(const Factor& f) const {
    CVec v = CVec::Zero(f.dim());
    for (const auto& t : terms) v += t.alpha * t.e.coords();
    return Element(f, v);
}

}  // namespace symdom

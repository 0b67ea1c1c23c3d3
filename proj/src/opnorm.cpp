#include "symdom/opnorm.hpp"

#include <cmath>
#include <numbers>

#include "symdom/random.hpp"
#include "symdom/spectral.hpp"
#include "symdom/triple.hpp"

namespace symdom {

namespace {

using RowMat = Eigen::Matrix<cplx, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

CVec dual_segment(const Factor& f, const CVec& h) {
    switch (f.kind()) {
    case Factor::Kind::rectangular: {
        const CMat H = Eigen::Map<const RowMat>(h.data(), f.rows(), f.cols());
        Eigen::JacobiSVD<CMat> svd(H, Eigen::ComputeThinU | Eigen::ComputeThinV);
        const RowMat x = svd.matrixU() * svd.matrixV().adjoint();
        return Eigen::Map<const CVec>(x.data(), x.size());
    }
    case Factor::Kind::hilbert: {
        const double n = h.norm();
        if (n == 0.0) {
            CVec e = CVec::Zero(f.dim());
            e[0] = 1.0;
            return e;
        }
        return h / n;
    }
    case Factor::Kind::spin: {
        // Extreme points are e^{it} r with r* = r and <r,r> = 2.
        const CMat& J = f.conjugation();
        const CVec hs = J * h.conjugate();
        const CVec hr = 0.5 * (h + hs);
        const CVec hi = (h - hs) / cplx(0.0, 2.0);
        Eigen::Matrix2d g;
        g(0, 0) = hr.squaredNorm();
        g(1, 1) = hi.squaredNorm();
        g(0, 1) = g(1, 0) = hr.dot(hi).real();
        Eigen::SelfAdjointEigenSolver<Eigen::Matrix2d> es(g);
        const Eigen::Vector2d cs = es.eigenvectors().col(1);
        CVec w = cs[0] * hr + cs[1] * hi;
        double nw = w.norm();
        if (nw == 0.0) {
            w = CVec::Zero(f.dim());
            w[0] = 1.0;
            w = 0.5 * (w + J * w.conjugate());
            nw = w.norm();
        }
        return std::polar(1.0, std::atan2(cs[1], cs[0])) * (std::sqrt(2.0) / nw) * w;
    }
    case Factor::Kind::direct_sum: {
        CVec x(f.dim());
        for (std::size_t p = 0; p < f.parts().size(); ++p) {
            const Factor& part = f.parts()[p];
            x.segment(f.offsets()[p], part.dim()) = dual_segment(part, h.segment(f.offsets()[p], part.dim()));
        }
        return x;
    }
    }
    return h;
}

// max over psi of sum_j |a_j + e^{i psi} conj(b_j)|
double row_max(const std::vector<cplx>& a, const std::vector<cplx>& b) {
    double bmax = 0.0;
    for (const auto& v : b) bmax = std::max(bmax, std::abs(v));
    auto g = [&](double psi) {
        const cplx rot = std::polar(1.0, psi);
        double s = 0.0;
        for (std::size_t j = 0; j < a.size(); ++j) s += std::abs(a[j] + rot * std::conj(b[j]));
        return s;
    };
    if (bmax == 0.0) return g(0.0);
    constexpr int samples = 720;
    const double step = 2.0 * std::numbers::pi / samples;
    int best = 0;
    double best_val = -1.0;
    for (int k = 0; k < samples; ++k) {
        const double v = g(k * step);
        if (v > best_val) {
            best_val = v;
            best = k;
        }
    }
    double lo = (best - 1) * step;
    double hi = (best + 1) * step;
    const double phi = 0.5 * (std::sqrt(5.0) - 1.0);
    double x1 = hi - phi * (hi - lo);
    double x2 = lo + phi * (hi - lo);
    double f1 = g(x1);
    double f2 = g(x2);
    for (int it = 0; it < 80; ++it) {
        if (f1 < f2) {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + phi * (hi - lo);
            f2 = g(x2);
        } else {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - phi * (hi - lo);
            f1 = g(x1);
        }
    }
    return std::max({best_val, f1, f2});
}

double polydisc_norm(const RealLinOp& t) {
    const int n = t.factor().dim();
    const RMat& r = t.matrix();
    double out = 0.0;
    for (int i = 0; i < n; ++i) {
        std::vector<cplx> a(n), b(n);
        for (int j = 0; j < n; ++j) {
            const double m11 = r(i, j), m12 = r(i, n + j), m21 = r(n + i, j), m22 = r(n + i, n + j);
            a[j] = cplx(0.5 * (m11 + m22), 0.5 * (m21 - m12));
            b[j] = cplx(0.5 * (m11 - m22), 0.5 * (m21 + m12));
        }
        out = std::max(out, row_max(a, b));
    }
    return out;
}

CVec norming_direction(const Factor& f, const CVec& y) {
    const auto sd = spectral_decomposition(Element(f, y));
    if (sd.empty()) return CVec::Zero(f.dim());
    return sd.terms.front().e.coords();
}

}  // namespace

CVec dual_argmax(const Factor& f, const CVec& h) { return dual_segment(f, h); }

std::pair<double, double> norm_equivalence(const Factor& f) {
    switch (f.kind()) {
    case Factor::Kind::rectangular: return {1.0 / std::sqrt(static_cast<double>(f.rank())), 1.0};
    case Factor::Kind::hilbert: return {1.0, 1.0};
    case Factor::Kind::spin: return {1.0 / std::sqrt(2.0), 1.0};
    case Factor::Kind::direct_sum: {
        double inv = 0.0;
        double c2 = 0.0;
        for (const auto& p : f.parts()) {
            const auto [a, b] = norm_equivalence(p);
            inv += 1.0 / (a * a);
            c2 = std::max(c2, b);
        }
        return {1.0 / std::sqrt(inv), c2};
    }
    }
    return {1.0, 1.0};
}

OpNormEstimate op_norm_estimate(const RealLinOp& t, std::uint64_t seed) {
    const Factor& f = t.factor();
    const RMat& m = t.matrix();
    if (f.kind() == Factor::Kind::hilbert) {
        Eigen::JacobiSVD<RMat> svd(m);
        const double v = svd.singularValues()(0);
        return {v, v, v, true};
    }
    if (f.is_polydisc()) {
        const double v = polydisc_norm(t);
        return {v, v, v, true};
    }

    Eigen::JacobiSVD<RMat> svd(m, Eigen::ComputeFullV);
    const auto [c1, c2] = norm_equivalence(f);
    const double upper = (c2 / c1) * svd.singularValues()(0);

    auto value = [&](const CVec& x) {
        const double nx = norm_coords(f, x);
        return nx > 0.0 ? norm_coords(f, t.apply(x)) / nx : 0.0;
    };
    auto ascend = [&](CVec x) {
        double best = value(x);
        int stall = 0;
        for (int it = 0; it < 200 && stall < 3; ++it) {
            const CVec y = t.apply(x);
            if (norm_coords(f, y) == 0.0) break;
            const CVec g = norming_direction(f, y);
            const CVec h = complexify(m.transpose() * realify(g));
            const CVec xn = dual_argmax(f, h);
            const double v = value(xn);
            if (v > best * (1.0 + 1e-15)) {
                best = v;
                stall = 0;
            } else {
                ++stall;
            }
            if (v >= best) x = xn;
        }
        return best;
    };

    double best = ascend(dual_argmax(f, complexify(svd.matrixV().col(0))));
    Rng rng(seed);
    for (int s = 0; s < 20; ++s) best = std::max(best, ascend(random_unit(f, rng).coords()));
    return {best, best, std::max(upper, best), false};
}

double op_norm(const RealLinOp& t) { return op_norm_estimate(t).value; }

}  // namespace symdom

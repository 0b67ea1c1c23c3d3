#include "symdom/peirce.hpp"

#include <cmath>

#include "symdom/spectral.hpp"
#include "symdom/triple.hpp"

namespace symdom {

double tripotent_defect(const Element& e) {
    return element_norm(triple_product(e, e, e) - e);
}

double orthogonality_defect(const Element& a, const Element& b) {
    return std::max(box(a, b).complex_matrix().cwiseAbs().maxCoeff(),
                    box(b, a).complex_matrix().cwiseAbs().maxCoeff());
}

int numerical_rank(const RealLinOp& t, double threshold) {
    if (t.factor().dim() == 0) return 0;
    if (t.linearity() == Linearity::complex_linear) {
        Eigen::JacobiSVD<CMat> svd(t.complex_matrix());
        return static_cast<int>((svd.singularValues().array() > threshold).count());
    }
    Eigen::JacobiSVD<RMat> svd(t.matrix());
    return static_cast<int>((svd.singularValues().array() > threshold).count()) / 2;
}

namespace {

std::array<RealLinOp, 3> projections_of(const Element& e) {
    const RealLinOp q = quadratic(e);
    const RealLinOp p2 = q * q;
    const RealLinOp p1 = (box(e, e) - p2) * 2.0;
    const RealLinOp p0 = bergman(e, e);
    return {p0, p1, p2};
}

void check_tripotent(const Element& e, const Tolerances& tol) {
    const double defect = tripotent_defect(e);
    const double n = element_norm(e);
    if (defect > tol.tripotent || std::abs(n - 1.0) > tol.tripotent)
        throw Error(ErrorCode::not_tripotent, "not a tripotent: ||{e,e,e}-e|| = " + std::to_string(defect) +
                                                  ", ||e|| = " + std::to_string(n));
}

}  // namespace

Tripotent Tripotent::make(const Element& e, const Tolerances& tol) {
    check_tripotent(e, tol);
    Tripotent t(e, projections_of(e));
    for (int k = 0; k < 3; ++k) t.dims_[2 - k] = numerical_rank(t.p_[k], tol.rank);
    t.flags_.minimal = t.dims_[0] == 1;
    t.flags_.maximal = t.dims_[2] == 0;
    t.flags_.structural = t.dims_[1] == 0;
    t.flags_.unitary = t.flags_.maximal && t.flags_.structural;
    return t;
}

const RealLinOp& Tripotent::projection(int k) const {
    if (k < 0 || k > 2) throw Error(ErrorCode::invalid_argument, "Peirce index must be 0, 1 or 2");
    return p_[k];
}

RealLinOp peirce_projection(const Tripotent& e, int k) { return e.projection(k); }

RealLinOp peirce_projection(const Element& e, int k, const Tolerances& tol) {
    if (k < 0 || k > 2) throw Error(ErrorCode::invalid_argument, "Peirce index must be 0, 1 or 2");
    check_tripotent(e, tol);
    return projections_of(e)[k];
}

JointPeirce::JointPeirce(std::vector<Element> frame, const Tolerances& tol)
    : factor_(frame.empty() ? throw Error(ErrorCode::invalid_argument, "empty frame") : frame.front().factor()),
      frame_(std::move(frame)) {
    const int n = size();
    const int d = factor_.dim();
    for (const auto& e : frame_) {
        require_same_factor(e, frame_.front());
        check_tripotent(e, tol);
    }
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (orthogonality_defect(frame_[i], frame_[j]) > tol.tripotent)
                throw Error(ErrorCode::non_orthogonal_frame,
                            "frame tripotents " + std::to_string(i + 1) + " and " + std::to_string(j + 1) +
                                " are not orthogonal");

    const CMat id = CMat::Identity(d, d);
    // spectral[k][m]: projection of D_k = 2 e_k[]e_k onto eigenvalue m.
    std::vector<std::array<CMat, 3>> spectral(n);
    for (int k = 0; k < n; ++k) {
        const CMat D = 2.0 * box(frame_[k], frame_[k]).complex_matrix();
        spectral[k][0] = (D - id) * (D - 2.0 * id) / 2.0;
        spectral[k][1] = -(D * (D - 2.0 * id));
        spectral[k][2] = D * (D - id) / 2.0;
    }
    p_.resize(static_cast<std::size_t>((n + 1) * (n + 2) / 2));
    for (int i = 0; i <= n; ++i)
        for (int j = i; j <= n; ++j) {
            CMat p = id;
            for (int k = 1; k <= n; ++k) {
                const int m = (i == k) + (j == k);
                p = p * spectral[k - 1][m];
            }
            p_[index(i, j)] = p;
        }
}

int JointPeirce::index(int i, int j) const {
    if (i > j) std::swap(i, j);
    const int n = size();
    if (i < 0 || j > n) throw Error(ErrorCode::invalid_argument, "joint Peirce index out of range");
    return i * (n + 1) - i * (i - 1) / 2 + (j - i);
}

const CMat& JointPeirce::matrix(int i, int j) const { return p_[index(i, j)]; }

RealLinOp JointPeirce::projection(int i, int j) const { return RealLinOp::from_complex(factor_, matrix(i, j)); }

CMat JointPeirce::weighted(const std::vector<double>& w) const {
    const int n = size();
    if (static_cast<int>(w.size()) != n + 1) throw Error(ErrorCode::invalid_argument, "weight count must be n+1");
    CMat out = CMat::Zero(factor_.dim(), factor_.dim());
    for (int i = 0; i <= n; ++i)
        for (int j = i; j <= n; ++j) out += (w[i] * w[j]) * matrix(i, j);
    return out;
}

RealLinOp joint_peirce_projection(const std::vector<Element>& frame, int i, int j, const Tolerances& tol) {
    return JointPeirce(frame, tol).projection(i, j);
}

RealLinOp bergman_via_peirce(const std::vector<Element>& frame, const std::vector<cplx>& lambda,
                             const Tolerances& tol) {
    if (frame.size() != lambda.size()) throw Error(ErrorCode::invalid_argument, "frame and lambda sizes differ");
    std::vector<double> w{1.0};
    for (const auto& l : lambda) {
        if (std::abs(l) >= 1.0) throw Error(ErrorCode::outside_ball, "bergman_via_peirce needs |lambda| < 1");
        w.push_back(1.0 - std::norm(l));
    }
    const JointPeirce jp(frame, tol);
    return RealLinOp::from_complex(jp.factor(), jp.weighted(w));
}

RealLinOp bergman_power(const Element& x, double exponent, const Tolerances& tol) {
    const Factor& f = x.factor();
    const double nx = element_norm(x);
    if (exponent < 0.0 && nx >= 1.0 - 1e-12)
        throw Error(ErrorCode::singular_operator, "B(x,x) is singular or ill-conditioned: ||x|| = " + std::to_string(nx));
    if (nx > 1.0 + tol.tripotent)
        throw Error(ErrorCode::outside_ball, "bergman_power needs ||x|| <= 1");
    const auto groups = spectral_decomposition(x, tol).grouped();
    if (groups.empty()) return RealLinOp::identity(f);
    std::vector<Element> frame;
    std::vector<double> w{1.0};
    for (const auto& g : groups) {
        frame.push_back(g.e);
        w.push_back(std::pow(std::max(0.0, 1.0 - g.alpha * g.alpha), exponent));
    }
    const JointPeirce jp(std::move(frame), tol);
    return RealLinOp::from_complex(f, jp.weighted(w));
}

}  // namespace symdom

#include "symdom/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <random>

#include "symdom/boundary.hpp"
#include "symdom/mobius.hpp"
#include "symdom/opnorm.hpp"
#include "symdom/peirce.hpp"
#include "symdom/random.hpp"
#include "symdom/serialize.hpp"
#include "symdom/spectral.hpp"
#include "symdom/triple.hpp"

namespace symdom {

namespace {

class Recorder {
public:
    void add(const std::string& name, double tolerance) {
        if (!index_.count(name)) {
            index_[name] = checks_.size();
            checks_.push_back({name, 0.0, tolerance, 0});
        }
    }
    void record(const std::string& name, double residual) {
        CheckResult& c = checks_.at(index_.at(name));
        ++c.samples;
        if (!(residual <= c.worst)) c.worst = std::isnan(residual) ? INFINITY : residual;
    }
    std::vector<CheckResult> take() { return std::move(checks_); }

private:
    std::map<std::string, std::size_t> index_;
    std::vector<CheckResult> checks_;
};

double max_entry(const CMat& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

cplx random_disc(Rng& rng, double cap) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    return std::polar(cap * std::sqrt(u(rng)), 2.0 * M_PI * u(rng));
}

bool exact_norm_factor(const Factor& f) { return f.kind() == Factor::Kind::hilbert || f.is_polydisc(); }

CMat exp_i_t(const CMat& m, double t) {
    Eigen::ComplexEigenSolver<CMat> es(m);
    const CMat& v = es.eigenvectors();
    CVec d(es.eigenvalues().size());
    for (Eigen::Index k = 0; k < d.size(); ++k) d[k] = std::exp(cplx(0.0, t) * es.eigenvalues()[k]);
    return v * d.asDiagonal() * v.inverse();
}

std::vector<Element> minimal_frame(const Element& a, const Tolerances& tol) {
    std::vector<Element> frame;
    for (const auto& t : spectral_decomposition(a, tol).terms) frame.push_back(t.e);
    return frame;
}

void algebra_checks(const Factor& f, Rng& rng, const Tolerances& tol, Recorder& rec) {
    const Element a = random_element(f, 1.0, rng), b = random_element(f, 1.0, rng);
    const Element x = random_element(f, 1.0, rng), y = random_element(f, 1.0, rng);
    const Element z = random_element(f, 1.0, rng);
    const double scale = std::max(1.0, element_norm(a) * element_norm(b) * element_norm(x) * element_norm(y) *
                                            element_norm(z));

    const Element lhs = triple_product(a, b, triple_product(x, y, z));
    const Element rhs = triple_product(triple_product(a, b, x), y, z) - triple_product(x, triple_product(b, a, y), z) +
                        triple_product(x, y, triple_product(a, b, z));
    rec.record("triple_identity", element_norm(lhs - rhs) / scale);

    const Element qxy = triple_product(x, y, x);
    const Element j1 = triple_product(qxy, z, qxy);
    const Element j2 = triple_product(x, triple_product(y, triple_product(x, z, x), y), x);
    rec.record("jordan_identity", element_norm(j1 - j2) / scale);

    const double na = element_norm(a);
    const RealLinOp aa = box(a, a);
    rec.record("box_norm", std::abs(op_norm(aa) - na * na));
    rec.record("box_cube", std::abs(element_norm(aa.apply(a)) - na * na * na));

    Eigen::ComplexEigenSolver<CMat> es(aa.complex_matrix(), false);
    double spec = 0.0;
    for (Eigen::Index k = 0; k < es.eigenvalues().size(); ++k) {
        const cplx l = es.eigenvalues()[k];
        spec = std::max({spec, std::abs(l.imag()), -l.real()});
    }
    rec.record("box_spectrum", spec);

    double herm = 0.0;
    for (double t : {-5.0, -1.0, 1.0, 5.0})
        herm = std::max(herm, std::abs(op_norm(RealLinOp::from_complex(f, exp_i_t(aa.complex_matrix(), t))) - 1.0));
    rec.record("hermitian_exp", herm);

    const SpectralDecomposition sd = spectral_decomposition(a, tol);
    rec.record("spectral_reconstruction", element_norm(sd.reconstruct(f) - a));
    rec.record("spectral_norm", sd.empty() ? na : std::abs(sd.terms.front().alpha - na));
    if (sd.size() >= 2) {
        const Element p = sd.terms.front().e * sd.terms.front().alpha;
        const Element q = sd.reconstruct(f) - p;
        rec.record("orthogonal_sum", std::max(orthogonality_defect(p, q),
                                              std::abs(element_norm(p + q) -
                                                       std::max(element_norm(p), element_norm(q)))));
    }
}

void peirce_checks(const Factor& f, Rng& rng, const Tolerances& tol, Recorder& rec) {
    const Element a = random_element(f, 1.0, rng);
    const std::vector<Element> frame = minimal_frame(a, tol);
    if (frame.empty()) return;
    const CMat id = CMat::Identity(f.dim(), f.dim());

    Element sum = Element::zero(f);
    for (const auto& e : frame) sum = sum + e;
    for (const Element& e : {frame.front(), sum}) {
        const Tripotent t = Tripotent::make(e, tol);
        CMat p[3];
        for (int k = 0; k < 3; ++k) p[k] = t.projection(k).complex_matrix();
        rec.record("peirce_sum", max_entry(p[0] + p[1] + p[2] - id));
        double idem = 0.0, ann = 0.0;
        for (int i = 0; i < 3; ++i) {
            idem = std::max(idem, max_entry(p[i] * p[i] - p[i]));
            for (int j = 0; j < 3; ++j)
                if (i != j) ann = std::max(ann, max_entry(p[i] * p[j]));
        }
        rec.record("peirce_idempotent", idem);
        rec.record("peirce_annihilation", ann);
        rec.record("peirce_eigen", element_norm(box(e, e).apply(t.projection(2).apply(a)) - t.projection(2).apply(a)));
    }

    const JointPeirce jp(frame, tol);
    const int n = jp.size();
    CMat total = CMat::Zero(f.dim(), f.dim());
    double idem = 0.0, on_frame = 0.0;
    for (int i = 0; i <= n; ++i)
        for (int j = i; j <= n; ++j) {
            const CMat& p = jp.matrix(i, j);
            total += p;
            idem = std::max(idem, max_entry(p * p - p));
            for (int k = 1; k <= n; ++k) {
                const CVec expected = (i == j && i == k) ? frame[k - 1].coords() : CVec::Zero(f.dim());
                on_frame = std::max(on_frame, (p * frame[k - 1].coords() - expected).cwiseAbs().maxCoeff());
            }
        }
    rec.record("joint_peirce_sum", max_entry(total - id));
    rec.record("joint_peirce_idempotent", idem);
    rec.record("joint_peirce_on_frame", on_frame);
    CMat inner = CMat::Zero(f.dim(), f.dim());
    for (int i = 1; i <= n; ++i)
        for (int j = i; j <= n; ++j) inner += jp.matrix(i, j);
    rec.record("joint_peirce_two_space",
               max_entry(inner - Tripotent::make(sum, tol).projection(2).complex_matrix()));

    std::vector<cplx> lambda;
    Element x = Element::zero(f);
    for (const auto& e : frame) {
        lambda.push_back(random_disc(rng, 0.95));
        x = x + e * lambda.back();
    }
    const CMat bxx = bergman(x, x).complex_matrix();
    rec.record("bergman_via_peirce", max_entry(bergman_via_peirce(frame, lambda, tol).complex_matrix() - bxx));
    const CMat half = bergman_power(x, 0.5, tol).complex_matrix();
    rec.record("bergman_sqrt", max_entry(half * half - bxx));

    const double nx = element_norm(x);
    const double target = 1.0 / (1.0 - nx * nx);
    const OpNormEstimate est = op_norm_estimate(bergman_power(x, -0.5, tol));
    if (exact_norm_factor(f))
        rec.record("bergman_inverse_sqrt_norm", std::abs(est.value - target) / target);
    else
        rec.record("bergman_inverse_sqrt_norm_estimate", std::abs(est.value - target) / target);
}

void metric_checks(const Factor& f, Rng& rng, const Tolerances& tol, Recorder& rec) {
    const Element a = random_element(f, 0.9, rng), x = random_element(f, 0.9, rng);
    const Element y = random_element(f, 0.9, rng);
    const Transvection ga(a, tol), gma(-a, tol);
    rec.record("transvection_at_zero", element_norm(ga(Element::zero(f)) - a));
    rec.record("transvection_inverse", element_norm(gma(ga(x)) - x));
    rec.record("kobayashi_invariance", std::abs(kobayashi(ga(x), ga(y), tol) - kobayashi(x, y, tol)));
    rec.record("kobayashi_symmetry", std::abs(kobayashi(x, y, tol) - kobayashi(y, x, tol)));

    if (f.kind() == Factor::Kind::hilbert) {
        const double lhs = 1.0 - std::pow(element_norm(transvection_apply(-y, x, tol)), 2);
        const double na = element_norm(x), nb = element_norm(y);
        const double rhs = (1.0 - na * na) * (1.0 - nb * nb) / std::norm(1.0 - inner(x, y));
        rec.record("hilbert_identity", std::abs(lhs - rhs));
    }

    // g_a(sum alpha_j e_j) = sum psi_{beta_j}(alpha_j) e_j for a = sum beta_j e_j
    const std::vector<Element> frame = minimal_frame(random_element(f, 1.0, rng), tol);
    if (!frame.empty()) {
        Element av = Element::zero(f), xv = Element::zero(f), expected = Element::zero(f);
        std::vector<cplx> beta;
        for (const auto& e : frame) {
            const cplx bj = random_disc(rng, 0.9), aj = random_disc(rng, 0.9);
            av = av + e * bj;
            xv = xv + e * aj;
            expected = expected + e * mobius(bj, aj);
            beta.push_back(bj);
        }
        rec.record(f.is_polydisc() ? "coordinatewise_transvection" : "frame_transvection",
                   element_norm(transvection_apply(av, xv, tol) - expected));

        if (frame.size() >= 2) {
            const Element p = frame[0] * beta[0];
            Element q = Element::zero(f);
            for (std::size_t k = 1; k < frame.size(); ++k) q = q + frame[k] * beta[k];
            const Element w = random_element(f, 0.9, rng);
            const Transvection gp(p, tol), gq(q, tol), gpq(p + q, tol);
            const double d = std::max(element_norm(gpq(w) - gp(gq(w))), element_norm(gp(q) - (p + q)));
            rec.record("transvection_factorisation", d);
        }
    }

    // 1 - ||g_{-y}(z)||^2 = 1 / ||B(z,z)^{-1/2} B(z,y) B(y,y)^{-1/2}||
    const Element z = random_element(f, 0.9, rng);
    const double lhs = 1.0 - std::pow(element_norm(transvection_apply(-y, z, tol)), 2);
    const RealLinOp t = bergman_power(z, -0.5, tol) * bergman(z, y) * bergman_power(y, -0.5, tol);
    const OpNormEstimate est = op_norm_estimate(t);
    if (exact_norm_factor(f))
        rec.record("bergman_distance_identity", std::abs(lhs * est.value - 1.0));
    else
        rec.record("bergman_distance_lower_bound", std::max(0.0, lhs * est.lower - 1.0));
}

void boundary_checks(const Factor& f, Rng& rng, const Tolerances& tol, Recorder& rec) {
    Element a = random_element(f, 1.0, rng);
    const double na = element_norm(a);
    if (na <= 0.0) return;
    const Element xi = a / na;
    const BoundaryComponent comp = component_of_boundary_point(xi, tol);
    rec.record("boundary_component", face_distance(comp, xi));

    const Tripotent c = comp.tripotent();
    const Element w = c.projection(0).apply(random_element(f, 1.0, rng));
    const double nw = element_norm(w);
    const Element face_point = c.element() + (nw > 1.0 ? w / nw : w);
    rec.record("face_closure", face_distance(comp, face_point));

    int violations = 0;
    if (f.is_abelian() || f.kind() == Factor::Kind::hilbert)
        if (!in_extended_shilov(c)) ++violations;
    rec.record("extended_shilov_class", violations);

    if (f.is_polydisc()) {
        std::uniform_int_distribution<int> pick(0, f.dim() - 1);
        std::uniform_real_distribution<double> phase(0.0, 2.0 * M_PI);
        const Element e1 = Element::basis(f, pick(rng)) * std::polar(1.0, phase(rng));
        const Element e2 = Element::basis(f, pick(rng)) * std::polar(1.0, phase(rng));
        const cplx lam = inner(e1, e2);
        rec.record("minimal_dichotomy", std::min(element_norm(e1 - e2 * lam), max_entry(box(e1, e2).complex_matrix())));
    }
}

}  // namespace

bool VerifyReport::passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed(); });
}

const CheckResult* VerifyReport::find(const std::string& name) const {
    for (const auto& c : checks)
        if (c.name == name) return &c;
    return nullptr;
}

VerifyReport verify_factor(const Factor& f, int trials, std::uint64_t seed, const Tolerances& tol, unsigned suites) {
    if (trials < 1) throw Error(ErrorCode::invalid_argument, "trials must be positive");
    Recorder rec;
    const double id = tol.identity;
    if (suites & suite_algebra) {
        for (const char* n : {"triple_identity", "jordan_identity", "box_cube", "box_spectrum", "spectral_reconstruction",
                              "spectral_norm", "orthogonal_sum"})
            rec.add(n, id);
        rec.add("box_norm", tol.norm_identity);
        rec.add("hermitian_exp", tol.cross_method);
    }
    if (suites & suite_peirce) {
        for (const char* n : {"peirce_sum", "peirce_idempotent", "peirce_annihilation", "peirce_eigen",
                              "joint_peirce_sum", "joint_peirce_idempotent", "joint_peirce_on_frame",
                              "joint_peirce_two_space", "bergman_via_peirce", "bergman_sqrt"})
            rec.add(n, id);
        if (exact_norm_factor(f))
            rec.add("bergman_inverse_sqrt_norm", tol.norm_identity);
        else
            rec.add("bergman_inverse_sqrt_norm_estimate", tol.cross_method);
    }
    if (suites & suite_metric) {
        rec.add("transvection_at_zero", id);
        rec.add("transvection_inverse", tol.inverse);
        rec.add("kobayashi_invariance", tol.norm_identity);
        rec.add("kobayashi_symmetry", tol.norm_identity);
        if (f.kind() == Factor::Kind::hilbert) rec.add("hilbert_identity", id);
        if (f.is_polydisc())
            rec.add("coordinatewise_transvection", tol.exact);
        else
            rec.add("frame_transvection", id);
        rec.add("transvection_factorisation", tol.inverse);
        if (exact_norm_factor(f))
            rec.add("bergman_distance_identity", tol.cross_method);
        else
            rec.add("bergman_distance_lower_bound", tol.cross_method);
    }
    if (suites & suite_boundary) {
        rec.add("boundary_component", tol.closure);
        rec.add("face_closure", tol.closure);
        rec.add("extended_shilov_class", 0.0);
        if (f.is_polydisc()) rec.add("minimal_dichotomy", id);
    }

    Rng rng(seed);
    for (int k = 0; k < trials; ++k) {
        if (suites & suite_algebra) algebra_checks(f, rng, tol, rec);
        if (suites & suite_peirce) peirce_checks(f, rng, tol, rec);
        if (suites & suite_metric) metric_checks(f, rng, tol, rec);
        if (suites & suite_boundary) boundary_checks(f, rng, tol, rec);
    }
    return {f.describe(), trials, seed, rec.take()};
}

nlohmann::json verify_to_json(const VerifyReport& r) {
    nlohmann::json checks = nlohmann::json::array();
    for (const auto& c : r.checks)
        checks.push_back({{"name", c.name},
                          {"worst", c.worst},
                          {"tolerance", c.tolerance},
                          {"samples", c.samples},
                          {"passed", c.passed()}});
    return {{"factor", r.factor}, {"trials", r.trials}, {"seed", r.seed}, {"passed", r.passed()}, {"checks", checks}};
}

}  // namespace symdom

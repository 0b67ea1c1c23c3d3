#include "symdom/horofunction.hpp"

#include <algorithm>
#include <cmath>

#include "symdom/mobius.hpp"
#include "symdom/random.hpp"
#include "symdom/serialize.hpp"
#include "symdom/spectral.hpp"
#include "symdom/triple.hpp"

namespace symdom {

struct HorofunctionData::State {
    std::vector<Element> frame;
    std::vector<double> sigma;
    Tripotent horocentre;
    JointPeirce jp;
};

namespace {

Element sum_of(const std::vector<Element>& v) {
    Element out = Element::zero(v.front().factor());
    for (const auto& e : v) out = out + e;
    return out;
}

}  // namespace

HorofunctionData HorofunctionData::from_limit_data(std::vector<Element> frame, std::vector<double> sigma,
                                                   const Tolerances& tol) {
    if (frame.empty()) throw Error(ErrorCode::invalid_argument, "horofunction needs a non-empty frame");
    if (frame.size() != sigma.size()) throw Error(ErrorCode::invalid_argument, "frame and sigma sizes differ");
    if (std::abs(sigma.front() - 1.0) > 1e-12)
        throw Error(ErrorCode::invalid_argument, "sigma_1 must equal 1");
    sigma.front() = 1.0;
    for (std::size_t i = 0; i < sigma.size(); ++i) {
        if (!(sigma[i] > 0.0) || sigma[i] > 1.0)
            throw Error(ErrorCode::invalid_argument, "sigma values must lie in (0, 1]");
        if (i > 0 && sigma[i] > sigma[i - 1])
            throw Error(ErrorCode::invalid_argument, "sigma values must be non-increasing");
    }
    for (const auto& e : frame) {
        const Tripotent t = Tripotent::make(e, tol);
        if (!t.flags().minimal) throw Error(ErrorCode::not_tripotent, "frame elements must be minimal tripotents");
    }
    JointPeirce jp(frame, tol);
    Tripotent c = Tripotent::make(sum_of(frame), tol);
    auto st = std::make_shared<const State>(State{std::move(frame), std::move(sigma), std::move(c), std::move(jp)});
    return HorofunctionData(std::move(st));
}

const Factor& HorofunctionData::factor() const { return s_->frame.front().factor(); }
int HorofunctionData::q() const { return static_cast<int>(s_->frame.size()); }
const std::vector<Element>& HorofunctionData::frame() const { return s_->frame; }
const std::vector<double>& HorofunctionData::sigma() const { return s_->sigma; }
const Tripotent& HorofunctionData::horocentre() const { return s_->horocentre; }
const JointPeirce& HorofunctionData::peirce() const { return s_->jp; }

std::vector<double> HorofunctionData::rho() const {
    std::vector<double> r;
    for (double s : s_->sigma) r.push_back(std::sqrt(s));
    return r;
}

Element HorofunctionData::centre(double s) const {
    if (!(s > 0.0)) throw Error(ErrorCode::invalid_argument, "hororadius must be positive");
    Element c = Element::zero(factor());
    for (int j = 0; j < q(); ++j) c = c + s_->frame[j] * (s_->sigma[j] / (s_->sigma[j] + s));
    return c;
}

CMat HorofunctionData::bergman_s_power(double s, double r) const {
    if (!(s > 0.0)) throw Error(ErrorCode::invalid_argument, "hororadius must be positive");
    std::vector<double> w{1.0};
    for (double sig : s_->sigma) w.push_back(std::pow(s / (sig + s), r));
    return s_->jp.weighted(w);
}

double HorofunctionData::membership_value(double s, const Element& x) const {
    require_same_factor(x, s_->frame.front());
    const CVec v = x.coords() - centre(s).coords();
    CVec y = CVec::Zero(v.size());
    std::vector<double> w{1.0};
    for (double sig : s_->sigma) w.push_back(std::sqrt((sig + s) / s));
    for (int i = 0; i <= q(); ++i)
        for (int j = i; j <= q(); ++j) y += (w[i] * w[j]) * (s_->jp.matrix(i, j) * v);
    return norm_coords(factor(), y);
}

nlohmann::json horofunction_to_json(const HorofunctionData& F) {
    nlohmann::json frame = nlohmann::json::array();
    for (const auto& e : F.frame()) frame.push_back(element_to_json(e));
    return {{"frame", frame}, {"sigma", F.sigma()}};
}

HorofunctionData horofunction_from_json(const nlohmann::json& j, const Factor& f, const Tolerances& tol) {
    require_keys(j, {"frame", "sigma"}, "horofunction");
    const auto& fr = require_field(j, "frame", "horofunction");
    const auto& sg = require_field(j, "sigma", "horofunction");
    if (!fr.is_array() || !sg.is_array() || fr.size() != sg.size())
        throw Error(ErrorCode::invalid_spec, "horofunction: 'frame' and 'sigma' must be arrays of equal length");
    std::vector<Element> frame;
    std::vector<double> sigma;
    for (const auto& e : fr) frame.push_back(element_from_json(e, f));
    for (const auto& s : sg) {
        if (!s.is_number()) throw Error(ErrorCode::invalid_spec, "horofunction: sigma entries must be numbers");
        sigma.push_back(s.get<double>());
    }
    try {
        return HorofunctionData::from_limit_data(std::move(frame), std::move(sigma), tol);
    } catch (const Error& e) {
        throw Error(ErrorCode::invalid_spec, std::string("horofunction: ") + e.what());
    }
}

EvaluatingSequence EvaluatingSequence::standard(const HorofunctionData& F, int count) {
    int k0 = 10;
    while (std::ldexp(1.0, -k0) >= 0.25 * F.sigma().back()) ++k0;
    EvaluatingSequence seq{F, {}};
    for (int k = k0; k < k0 + count; ++k) seq.t.push_back(std::ldexp(1.0, -k));
    return seq;
}

Element EvaluatingSequence::element(double t) const {
    Element y = Element::zero(F.factor());
    for (int i = 0; i < F.q(); ++i) {
        const double a2 = (i == 0) ? 1.0 - t : 1.0 - t / F.sigma()[i];
        y = y + F.frame()[i] * std::sqrt(std::max(0.0, a2));
    }
    return y;
}

SequenceEstimate eval_F_sequence_detail(const HorofunctionData& F, const Element& x, const Tolerances& tol) {
    require_open_ball(x, "horofunction argument");
    const Transvection g(-x, tol);
    const EvaluatingSequence seq = EvaluatingSequence::standard(F);
    const std::size_t n = seq.t.size();
    std::vector<double> r(n);
    for (std::size_t k = 0; k < n; ++k) {
        const double ny = element_norm(g.apply_closed(seq.element(seq.t[k])));
        r[k] = seq.t[k] / ((1.0 - ny) * (1.0 + ny));
    }
    // Richardson in t with ratio 1/2: remove the O(t) and O(t^2) terms.
    std::vector<double> r1(n - 1), r2(n - 2);
    for (std::size_t k = 0; k + 1 < n; ++k) r1[k] = 2.0 * r[k + 1] - r[k];
    for (std::size_t k = 0; k + 2 < n; ++k) r2[k] = (4.0 * r1[k + 1] - r1[k]) / 3.0;
    std::size_t best = 0;
    double spread = std::abs(r2[1] - r2[0]);
    for (std::size_t k = 1; k + 1 < r2.size(); ++k) {
        const double d = std::abs(r2[k + 1] - r2[k]);
        if (d < spread) {
            spread = d;
            best = k;
        }
    }
    const double value = r2[best + 1];
    return {value, spread, spread <= tol.sequence_fluct * std::abs(value)};
}

double eval_F_sequence(const HorofunctionData& F, const Element& x, const Tolerances& tol) {
    return eval_F_sequence_detail(F, x, tol).value;
}

double eval_F_bisect(const HorofunctionData& F, const Element& x, const Tolerances& tol) {
    require_open_ball(x, "horofunction argument");
    const double n = element_norm(x);
    auto inside = [&](double s) { return F.membership_value(s, x) <= 1.0; };
    double lo = 0.999 * (1.0 - n) / (1.0 + n);
    double hi = 1.001 * (1.0 + n) / (1.0 - n);
    for (int it = 0; inside(lo); ++it) {
        if (it > 200) throw Error(ErrorCode::invalid_argument, "horofunction bisection: lower bracket failed");
        lo *= 0.5;
    }
    for (int it = 0; !inside(hi); ++it) {
        if (it > 200) throw Error(ErrorCode::invalid_argument, "horofunction bisection: upper bracket failed");
        hi *= 2.0;
    }
    for (int it = 0; it < 400 && hi - lo > tol.bisect * std::min(1.0, hi); ++it) {
        const double mid = 0.5 * (lo + hi);
        (inside(mid) ? hi : lo) = mid;
    }
    return 0.5 * (lo + hi);
}

OpNormEstimate eval_F_opnorm(const HorofunctionData& F, const Element& x, const Tolerances& tol) {
    require_open_ball(x, "horofunction argument");
    const Factor& f = F.factor();
    const CMat bneg = bergman_power(x, -0.5, tol).complex_matrix();
    const CMat bxc = bergman(x, F.horocentre().element()).complex_matrix();
    const auto rho = F.rho();
    CMat sum = CMat::Zero(f.dim(), f.dim());
    for (int i = 1; i <= F.q(); ++i)
        for (int j = i; j <= F.q(); ++j) sum += (rho[i - 1] * rho[j - 1]) * F.peirce().matrix(i, j);
    return op_norm_estimate(RealLinOp::from_complex(f, bneg * bxc * sum));
}

double gromov_h(const HorofunctionData& F, const Element& x, const Tolerances& tol) {
    return 0.5 * std::log(eval_F_bisect(F, x, tol));
}

Horoball::Horoball(HorofunctionData F, double s) : F_(std::move(F)), s_(s), centre_(F_.centre(s)) {}

RealLinOp Horoball::bergman_operator() const { return RealLinOp::from_complex(F_.factor(), F_.bergman_s_power(s_, 1.0)); }

OpNormEstimate Horoball::outer_radius() const {
    return op_norm_estimate(RealLinOp::from_complex(F_.factor(), F_.bergman_s_power(s_, 0.5)));
}

Horoball horoball(const HorofunctionData& F, double s) {
    if (!(s > 0.0)) throw Error(ErrorCode::invalid_argument, "hororadius must be positive");
    return Horoball(F, s);
}

bool horoball_contains(const Horoball& H, const Element& x) { return H.contains(x); }

BoundaryComponent closed_intersection_component(const HorofunctionData& F, const Tolerances&) {
    return BoundaryComponent(F.horocentre());
}

ClosedIntersectionCheck check_closed_intersection(const HorofunctionData& F, const std::vector<double>& s_list,
                                                  int samples, double far_distance, std::uint64_t seed,
                                                  const Tolerances& tol) {
    const Factor& f = F.factor();
    const Tripotent& c = F.horocentre();
    const RealLinOp& p0 = c.projection(0);
    const RealLinOp& p1 = c.projection(1);
    const RealLinOp& p2 = c.projection(2);
    const double s_min = *std::min_element(s_list.begin(), s_list.end());
    Rng rng(seed);
    ClosedIntersectionCheck out;
    out.smallest_far = std::numeric_limits<double>::infinity();
    for (int k = 0; k < samples; ++k) {
        // A point of c + (V0(c) n closed ball); every other sample sits on the face's rim.
        Element w = p0.apply(random_element(f, 1.0, rng));
        const double nw = element_norm(w);
        if (k % 2 == 1 && nw > 1e-8) w = w / nw;
        const Element x = c.element() + w;
        ++out.inside_samples;
        bool ok = true;
        for (double s : s_list) {
            const double v = F.membership_value(s, x);
            out.worst_inside = std::max(out.worst_inside, v);
            if (v > 1.0 + tol.closure) ok = false;
        }
        if (!ok) ++out.inside_failures;
    }
    int drawn = 0;
    while (out.far_samples < samples && drawn < 200 * samples) {
        ++drawn;
        Element x = random_element(f, 1.0, rng);
        if (drawn % 2 == 0) x = x / element_norm(x);
        const double d = std::max(element_norm(p2.apply(x) - c.element()), element_norm(p1.apply(x)));
        if (d < far_distance) continue;
        ++out.far_samples;
        const double v = F.membership_value(s_min, x);
        out.smallest_far = std::min(out.smallest_far, v);
        if (v <= 1.0 + tol.closure) ++out.far_failures;
    }
    return out;
}

namespace {

// Value at 0 of the polynomial through (t[i], v[i]).
template <class V>
V neville_at_zero(const std::vector<double>& t, std::vector<V> v) {
    const std::size_t n = t.size();
    for (std::size_t m = 1; m < n; ++m)
        for (std::size_t i = 0; i + m < n; ++i)
            v[i] = (t[i + m] * v[i] - t[i] * v[i + 1]) * (1.0 / (t[i + m] - t[i]));
    return v[0];
}

}  // namespace

SigmaEstimate estimate_sigma_from_sequence(const std::vector<Element>& z, const Tolerances& tol) {
    if (z.size() < 8) throw Error(ErrorCode::invalid_argument, "sigma estimation needs at least 8 elements");
    const Factor& f = z.front().factor();
    const std::size_t K = z.size();
    std::vector<SpectralDecomposition> sd;
    for (const auto& x : z) {
        require_same_factor(x, z.front());
        sd.push_back(spectral_decomposition(x, tol));
    }
    const auto& last = sd.back().terms;
    if (last.empty()) throw Error(ErrorCode::invalid_argument, "sigma estimation: last element is zero");
    const std::size_t tracks = last.size();

    SigmaEstimate out{{}, {}, Element::zero(f), {}};
    // alpha[k][i]: spectral value of track i at index k (0 when absent).
    std::vector<std::vector<double>> alpha(K, std::vector<double>(tracks, 0.0));
    std::vector<CVec> current(tracks);
    for (std::size_t i = 0; i < tracks; ++i) {
        alpha[K - 1][i] = last[i].alpha;
        current[i] = last[i].e.coords();
    }
    for (std::size_t kk = K - 1; kk-- > 0;) {
        const auto& terms = sd[kk].terms;
        std::vector<bool> used_term(terms.size(), false), used_track(tracks, false);
        for (std::size_t round = 0; round < std::min(terms.size(), tracks); ++round) {
            double best = -1.0;
            std::size_t bi = 0, bj = 0;
            for (std::size_t j = 0; j < terms.size(); ++j) {
                if (used_term[j]) continue;
                for (std::size_t i = 0; i < tracks; ++i) {
                    if (used_track[i]) continue;
                    const double ov = std::abs(current[i].dot(terms[j].e.coords()));
                    if (ov > best) {
                        best = ov;
                        bi = i;
                        bj = j;
                    }
                }
            }
            used_term[bj] = used_track[bi] = true;
            alpha[kk][bi] = terms[bj].alpha;
            const double residual = 1.0 - best;
            out.diagnostics.worst_alignment = std::max(out.diagnostics.worst_alignment, residual);
            if (residual > 0.1) out.diagnostics.aligned = false;
            const cplx ov = current[bi].dot(terms[bj].e.coords());
            current[bi] = terms[bj].e.coords() * (std::abs(ov) > 0.0 ? std::conj(ov) / std::abs(ov) : 1.0);
        }
    }

    // Extrapolate the ratios in t_k = 1 - alpha_k1^2 over the last three indices.
    std::vector<double> t;
    for (std::size_t k = K - 3; k < K; ++k) t.push_back(1.0 - alpha[k][0] * alpha[k][0]);
    const bool distinct = t[0] != t[1] && t[1] != t[2] && t[0] != t[2];
    std::vector<std::pair<double, std::size_t>> kept;
    for (std::size_t i = 0; i < tracks; ++i) {
        std::vector<double> ratio;
        for (std::size_t k = K - 3; k < K; ++k) {
            const double d = 1.0 - alpha[k][i] * alpha[k][i];
            ratio.push_back(d > 0.0 ? (1.0 - alpha[k][0] * alpha[k][0]) / d : 1.0);
        }
        double est = ratio.back();
        double err = 0.0;
        if (i == 0) {
            est = 1.0;
        } else if (distinct) {
            est = neville_at_zero(t, ratio);
            const double lin = neville_at_zero(std::vector<double>{t[1], t[2]}, std::vector<double>{ratio[1], ratio[2]});
            err = std::abs(est - lin);
        }
        out.diagnostics.raw_sigma.push_back(est);
        out.diagnostics.extrapolation_error.push_back(err);
        if (est > std::max(tol.sigma_floor, 10.0 * err))
            kept.emplace_back(std::min(est, 1.0), i);
        else
            ++out.diagnostics.truncated;
    }
    std::stable_sort(kept.begin(), kept.end(), [](const auto& a, const auto& b) { return a.first > b.first; });
    for (const auto& [s, i] : kept) {
        out.sigma.push_back(s);
        out.frame.push_back(last[i].e);
    }
    out.sigma.front() = 1.0;

    if (distinct) {
        std::vector<CVec> pts;
        for (std::size_t k = K - 3; k < K; ++k) pts.push_back(z[k].coords());
        out.limit = Element(f, neville_at_zero(t, pts));
    } else {
        out.limit = z.back();
    }
    return out;
}

}  // namespace symdom

#include "symdom/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

#include "symdom/linop.hpp"
#include "symdom/mobius.hpp"
#include "symdom/random.hpp"
#include "symdom/serialize.hpp"
#include "symdom/spectral.hpp"
#include "symdom/triple.hpp"

namespace symdom {

using json = nlohmann::json;

namespace {

constexpr double escape_margin = 1e-4;
constexpr double inf = std::numeric_limits<double>::infinity();

double residual_of(const SelfMap& f, double beta, const Element& x) {
    return element_norm(f.apply_closed(x) * beta - x);
}

// One Newton step for beta f(x) = x on the realified coordinates.
std::optional<Element> newton_step(const SelfMap& f, double beta, const Element& x, double r0) {
    const Factor& fac = f.factor();
    const int n = fac.dim();
    const double nx = element_norm(x);
    const double h = std::min(1e-7, 0.25 * (1.0 - nx));
    if (!(h > 0.0)) return std::nullopt;
    const RVec xr = realify(x.coords());
    auto g = [&](const RVec& v) {
        const Element e(fac, complexify(v));
        return RVec(realify((f.apply_closed(e) * beta - e).coords()));
    };
    RMat jac(2 * n, 2 * n);
    for (int k = 0; k < 2 * n; ++k) {
        RVec p = xr, m = xr;
        p[k] += h;
        m[k] -= h;
        jac.col(k) = (g(p) - g(m)) / (2.0 * h);
    }
    const RVec delta = jac.fullPivLu().solve(-g(xr));
    if (!delta.allFinite()) return std::nullopt;
    const Element y(fac, complexify(xr + delta));
    if (!(element_norm(y) < 1.0)) return std::nullopt;
    if (!(residual_of(f, beta, y) < r0)) return std::nullopt;
    return y;
}

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", std::abs(v) < 5e-13 ? 0.0 : v);
    return buf;
}

std::string format_element(const Element& e) {
    std::string s = e.dim() == 1 ? "" : "(";
    for (int k = 0; k < e.dim(); ++k) {
        if (k) s += ", ";
        const cplx z = e[k];
        if (std::abs(z.imag()) < 5e-13) {
            s += fmt(z.real());
        } else if (std::abs(z.real()) < 5e-13) {
            s += fmt(z.imag()) + "i";
        } else {
            s += fmt(z.real()) + (z.imag() < 0 ? "-" : "+") + fmt(std::abs(z.imag())) + "i";
        }
    }
    return e.dim() == 1 ? s : s + ")";
}

double safe_kobayashi(const Element& x, const Element& y, const Tolerances& tol) {
    if (element_norm(x) >= 1.0 - 1e-12 || element_norm(y) >= 1.0 - 1e-12) return inf;
    try {
        return kobayashi(x, y, tol);
    } catch (const Error&) {
        return inf;
    }
}

Element mean_of(const std::vector<Element>& pts, const std::vector<int>& idx) {
    Element m = Element::zero(pts.front().factor());
    for (int i : idx) m = m + pts[i];
    return m / static_cast<double>(idx.size());
}

std::vector<std::vector<int>> complete_linkage(int n, double tol, const std::function<double(int, int)>& dist) {
    std::vector<std::vector<int>> groups;
    for (int i = 0; i < n; ++i) {
        bool placed = false;
        for (auto& g : groups) {
            if (std::all_of(g.begin(), g.end(), [&](int j) { return dist(i, j) <= tol; })) {
                g.push_back(i);
                placed = true;
                break;
            }
        }
        if (!placed) groups.push_back({i});
    }
    return groups;
}

json flags_to_json(const TripotentFlags& fl) {
    return {{"minimal", fl.minimal}, {"maximal", fl.maximal}, {"structural", fl.structural}, {"unitary", fl.unitary}};
}

json tolerances_to_json(const Tolerances& tol) {
    json j = json::object();
    for (const auto& n : Tolerances::names()) j[n] = tol.get(n);
    return j;
}

}  // namespace

FixedPointResult earle_hamilton(const SelfMap& f, double beta, const Tolerances& tol, int max_iterations) {
    if (!(beta > 0.0 && beta < 1.0)) throw Error(ErrorCode::invalid_argument, "beta must lie in (0, 1)");
    Element x = Element::zero(f.factor());
    int newton = 0;
    std::vector<double> history;
    for (int it = 0; it <= max_iterations; ++it) {
        const Element fx = f.apply_closed(x) * beta;
        const double r = element_norm(fx - x);
        if (r <= tol.eh_tol) return {x, r, it, newton};
        history.push_back(r);
        if (history.size() >= 20 && r > 0.5 * history[history.size() - 20]) {
            history.clear();
            double rr = r;
            bool moved = false;
            for (int k = 0; k < 8 && rr > tol.eh_tol; ++k) {
                const auto y = newton_step(f, beta, x, rr);
                if (!y) break;
                x = *y;
                rr = residual_of(f, beta, x);
                ++newton;
                moved = true;
            }
            if (moved) continue;
        }
        x = fx;
    }
    throw Error(ErrorCode::iteration_cap, "fixed-point iteration for beta = " + fmt(beta) + " did not converge; last iterate " +
                                              format_element(x));
}

std::vector<double> default_beta_schedule() {
    std::vector<double> b;
    for (int k = 3; k <= 14; ++k) b.push_back(1.0 - std::ldexp(1.0, -k));
    return b;
}

std::string to_string(FixedPointVerdict v) {
    switch (v) {
    case FixedPointVerdict::fixed_point_free: return "fixed-point free";
    case FixedPointVerdict::interior_fixed_point: return "interior fixed point";
    case FixedPointVerdict::indeterminate: return "indeterminate";
    }
    return "indeterminate";
}

WolffData wolff(const SelfMap& f, const std::vector<double>& schedule, std::uint64_t seed, int samples,
                const Tolerances& tol) {
    if (schedule.size() < 8) throw Error(ErrorCode::invalid_argument, "beta schedule needs at least 8 values");
    for (std::size_t k = 0; k < schedule.size(); ++k)
        if (!(schedule[k] > 0.0 && schedule[k] < 1.0) || (k > 0 && schedule[k] <= schedule[k - 1]))
            throw Error(ErrorCode::invalid_argument, "beta schedule must increase inside (0, 1)");
    WolffData w;
    w.beta = schedule;
    std::vector<Element> zs;
    for (double b : schedule) {
        w.fixed_points.push_back(earle_hamilton(f, b, tol));
        zs.push_back(w.fixed_points.back().z);
    }
    const std::size_t K = zs.size();
    const double nK = element_norm(zs[K - 1]);
    const double step = element_norm(zs[K - 1] - zs[K - 2]);
    if (nK < 1.0 - 1e-3 && step < 1e-3) {
        Element p = zs[K - 1];
        double r = residual_of(f, 1.0, p);
        for (int k = 0; k < 20 && r > tol.eh_tol; ++k) {
            const auto y = newton_step(f, 1.0, p, r);
            if (!y) break;
            p = *y;
            r = residual_of(f, 1.0, p);
        }
        w.verdict = FixedPointVerdict::interior_fixed_point;
        w.interior_point = p;
        w.note = "fixed points of beta f converge inside the ball; residual of f(p) = p is " + fmt(r);
        return w;
    }
    bool increasing = true;
    for (std::size_t k = K / 2; k + 1 < K; ++k)
        if (element_norm(zs[k + 1]) < element_norm(zs[k]) - 1e-12) increasing = false;
    if (nK < 1.0 - 1e-3 || !increasing) {
        w.note = "fixed points of beta f neither settle inside the ball nor approach the sphere";
        return w;
    }
    try {
        SigmaEstimate est = estimate_sigma_from_sequence(zs, tol);
        w.F = HorofunctionData::from_limit_data(est.frame, est.sigma, tol);
        w.zeta = est.limit;
        w.sigma = std::move(est);
    } catch (const Error& e) {
        w.note = std::string("horofunction construction failed: ") + e.what();
        return w;
    }
    w.verdict = FixedPointVerdict::fixed_point_free;

    Rng rng(seed);
    for (int i = 0; i < samples; ++i) {
        const Element x = random_element(f.factor(), 0.95, rng);
        const Element y = f(x);
        if (element_norm(y) >= 1.0 - 1e-9) continue;
        const double fx = eval_F_bisect(*w.F, x, tol);
        const double fy = eval_F_bisect(*w.F, y, tol);
        if (w.invariance_samples == 0) {
            w.invariance_margin = fy - fx;
            w.invariance_relative = (fy - fx) / fx;
        } else {
            w.invariance_margin = std::max(w.invariance_margin, fy - fx);
            w.invariance_relative = std::max(w.invariance_relative, (fy - fx) / fx);
        }
        ++w.invariance_samples;
    }
    return w;
}

std::vector<TailCluster> cluster_points(const std::vector<Element>& pts, double tol) {
    std::vector<TailCluster> out;
    if (pts.empty()) return out;
    const int n = static_cast<int>(pts.size());
    std::vector<double> d(static_cast<std::size_t>(n) * n, 0.0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < i; ++j) d[i * n + j] = d[j * n + i] = element_norm(pts[i] - pts[j]);
    for (const auto& g : complete_linkage(n, tol, [&](int i, int j) { return d[i * n + j]; })) {
        double diam = 0.0;
        for (int i : g)
            for (int j : g) diam = std::max(diam, d[i * n + j]);
        out.push_back({mean_of(pts, g), static_cast<int>(g.size()), diam});
    }
    return out;
}

OrbitRecord orbit(const SelfMap& f, const Element& a, int N, const Tolerances& tol) {
    if (N < 0) throw Error(ErrorCode::invalid_argument, "orbit length must be non-negative");
    require_open_ball(a, "orbit start");
    OrbitRecord r{a, {a}, {element_norm(a)}, {}, 0, 0.0, 0, {}, true};
    for (int n = 0; n < N; ++n) {
        r.points.push_back(f.apply_closed(r.points.back()));
        r.norms.push_back(element_norm(r.points.back()));
        r.kobayashi_steps.push_back(safe_kobayashi(r.points[n], r.points[n + 1], tol));
    }
    r.max_norm = *std::max_element(r.norms.begin(), r.norms.end());
    r.stagnation_index = N;
    while (r.stagnation_index > 0 && r.norms[r.stagnation_index] >= r.norms[r.stagnation_index - 1] - 1e-15)
        --r.stagnation_index;
    r.tail_start = N - N / 4;
    const std::vector<Element> tail(r.points.begin() + r.tail_start, r.points.end());
    r.clusters = cluster_points(tail, tol.cluster_tol);
    r.finite_omega = tail.size() < 4 || r.clusters.size() <= tail.size() / 2;
    return r;
}

LimitFunctions limit_functions(const SelfMap& f, const std::vector<Element>& starts, int N, const Tolerances& tol) {
    LimitFunctions out;
    for (const auto& a : starts) out.orbits.push_back(orbit(f, a, N, tol));
    if (out.orbits.empty()) return out;
    const int t0 = out.orbits.front().tail_start;
    const int m = N - t0 + 1;
    const std::size_t S = out.orbits.size();
    auto dist = [&](int i, int j) {
        double d = 0.0;
        for (const auto& o : out.orbits) d = std::max(d, element_norm(o.points[t0 + i] - o.points[t0 + j]));
        return d;
    };
    for (const auto& g : complete_linkage(m, tol.cluster_tol, dist)) {
        JointCluster jc{{}, static_cast<int>(g.size())};
        for (std::size_t s = 0; s < S; ++s) {
            std::vector<int> idx;
            for (int i : g) idx.push_back(t0 + i);
            jc.values.push_back(mean_of(out.orbits[s].points, idx));
        }
        out.joint.push_back(std::move(jc));
    }
    std::vector<Element> centres;
    for (const auto& o : out.orbits)
        for (const auto& c : o.clusters) centres.push_back(c.centre);
    for (std::size_t i = 0; i < centres.size(); ++i)
        for (std::size_t j = 0; j < i; ++j)
            out.shared_diameter = std::max(out.shared_diameter, element_norm(centres[i] - centres[j]));
    return out;
}

HypothesisCheck check_limit_hypothesis(const Factor& f, const std::vector<TailCluster>& clusters, const Tolerances& tol) {
    HypothesisCheck h;
    Tolerances loose = tol;
    loose.unit_threshold = std::max(tol.unit_threshold, tol.capture);
    bool interior = false, failed = false, failed_minimal = false;
    for (const auto& c : clusters) {
        LimitPointClass lp{c.centre, tripotent_part(c.centre, loose), std::nullopt, false};
        if (element_norm(c.centre) < 1.0 - tol.capture) {
            interior = true;
        } else {
            try {
                const Tripotent t = Tripotent::make(lp.tripotent_part, tol);
                lp.flags = t.flags();
                lp.extended_shilov = in_extended_shilov(t);
                if (!lp.extended_shilov) {
                    failed = true;
                    failed_minimal = failed_minimal || t.flags().minimal;
                }
            } catch (const Error&) {
                interior = true;
            }
        }
        h.points.push_back(std::move(lp));
    }
    if (clusters.empty() || interior)
        h.status = "indeterminate: interior limit point";
    else if (failed_minimal)
        h.status = "fails: minimal non-structural limit tripotent";
    else if (failed)
        h.status = "fails: non-structural limit tripotent";
    else
        h.status = "holds";
    if (f.is_polydisc() && f.dim() == 2)
        h.note = "bidisc: the component conclusion holds without this hypothesis";
    else if (f.is_abelian())
        h.note = "abelian: every tripotent is structural";
    else if (f.kind() == Factor::Kind::hilbert)
        h.note = "rank one: every non-zero tripotent is maximal";
    return h;
}

std::vector<Element> resolve_starts(const Factor& f, const DynamicsConfig& cfg) {
    if (!cfg.starts.empty()) return cfg.starts;
    std::vector<Element> starts;
    Rng rng(cfg.seed + 1);
    for (int k = 0; k < cfg.random_starts; ++k) starts.push_back(random_element(f, cfg.start_radius, rng));
    return starts;
}

DenjoyWolffReport denjoy_wolff_report(const SelfMap& f, const DynamicsConfig& cfg) {
    const Tolerances& tol = cfg.tol;
    DenjoyWolffReport r{f.factor(), selfmap_to_json(f), {}, "", std::nullopt, 0.0, std::nullopt, std::nullopt,
                        {}, {}, 0, 0, 0.0, false, false, "", tol};
    r.wolff = wolff(f, cfg.beta_schedule, cfg.seed, cfg.invariance_samples, tol);

    const std::vector<Element> starts = resolve_starts(f.factor(), cfg);

    if (r.wolff.verdict != FixedPointVerdict::fixed_point_free) {
        r.limits = limit_functions(f, starts, cfg.iterations, tol);
        if (r.wolff.verdict == FixedPointVerdict::interior_fixed_point) {
            r.verdict = "fixed point found at " + format_element(*r.wolff.interior_point);
        } else {
            r.verdict = "indeterminate";
        }
        r.conclusion = r.verdict;
        return r;
    }

    const HorofunctionData& F = *r.wolff.F;
    r.a0 = F.centre(cfg.a0_hororadius);
    r.s0 = eval_F_bisect(F, *r.a0, tol);
    r.horocentre_component = BoundaryComponent(F.horocentre());
    Element c0 = Element::zero(f.factor());
    for (int i = 0; i < F.q(); ++i)
        if (F.sigma()[i] > r.s0) c0 = c0 + F.frame()[i];
    r.predicted = BoundaryComponent(Tripotent::make(c0, tol));

    std::vector<Element> all{*r.a0};
    all.insert(all.end(), starts.begin(), starts.end());
    r.limits = limit_functions(f, all, cfg.iterations, tol);
    r.hypothesis = check_limit_hypothesis(f.factor(), r.limits.orbits.front().clusters, tol);

    r.escaped = true;
    for (const auto& o : r.limits.orbits) {
        if (o.max_norm < 1.0 - escape_margin) r.escaped = false;
        std::vector<Element> test;
        if (o.finite_omega) {
            for (const auto& c : o.clusters) test.push_back(c.centre);
        } else {
            test.assign(o.points.begin() + o.tail_start, o.points.end());
        }
        for (const auto& x : test) {
            ++r.checked;
            if (r.predicted->closure_contains(x, tol.capture)) ++r.captured;
            r.worst_capture_distance = std::max(r.worst_capture_distance, face_distance(*r.predicted, x));
        }
    }
    r.all_captured = r.checked > 0 && r.captured == r.checked;
    r.verdict = r.escaped ? "fixed-point free" : "indeterminate";
    r.conclusion = r.verdict + "; component {" + format_element(c0) + "}; " +
                   (r.all_captured ? std::string("all clusters captured")
                                   : std::to_string(r.checked - r.captured) + " of " + std::to_string(r.checked) +
                                         " limit points outside the predicted closure");
    return r;
}

namespace {

json orbit_summary(const OrbitRecord& o) {
    json clusters = json::array();
    for (const auto& c : o.clusters)
        clusters.push_back({{"centre", element_to_json(c.centre)}, {"count", c.count}, {"diameter", c.diameter}});
    return {{"start", element_to_json(o.start)},
            {"iterations", static_cast<int>(o.points.size()) - 1},
            {"final", element_to_json(o.points.back())},
            {"max_norm", o.max_norm},
            {"stagnation_index", o.stagnation_index},
            {"tail_start", o.tail_start},
            {"finite_omega", o.finite_omega},
            {"clusters", clusters}};
}

json wolff_to_json(const WolffData& w) {
    json fps = json::array();
    for (std::size_t k = 0; k < w.fixed_points.size(); ++k) {
        const auto& p = w.fixed_points[k];
        fps.push_back({{"beta", w.beta[k]},
                       {"z", element_to_json(p.z)},
                       {"norm", element_norm(p.z)},
                       {"residual", p.residual},
                       {"iterations", p.iterations},
                       {"newton_steps", p.newton_steps}});
    }
    json j = {{"verdict", to_string(w.verdict)}, {"fixed_points", fps}, {"note", w.note}};
    if (w.interior_point) j["interior_point"] = element_to_json(*w.interior_point);
    if (w.zeta) j["zeta"] = element_to_json(*w.zeta);
    if (w.F) j["horofunction"] = horofunction_to_json(*w.F);
    if (w.sigma) {
        const auto& d = w.sigma->diagnostics;
        j["sigma_diagnostics"] = {{"aligned", d.aligned},
                                  {"worst_alignment", d.worst_alignment},
                                  {"raw_sigma", d.raw_sigma},
                                  {"extrapolation_error", d.extrapolation_error},
                                  {"truncated", d.truncated}};
    }
    j["invariance"] = {{"samples", w.invariance_samples},
                       {"margin", w.invariance_margin},
                       {"relative_margin", w.invariance_relative}};
    return j;
}

}  // namespace

json report_to_json(const DenjoyWolffReport& r) {
    json orbits = json::array();
    for (const auto& o : r.limits.orbits) orbits.push_back(orbit_summary(o));
    json points = json::array();
    for (const auto& p : r.hypothesis.points) {
        json pj = {{"point", element_to_json(p.point)},
                   {"tripotent_part", element_to_json(p.tripotent_part)},
                   {"extended_shilov", p.extended_shilov}};
        if (p.flags) pj["flags"] = flags_to_json(*p.flags);
        points.push_back(pj);
    }
    json j = {{"factor", factor_to_json(r.factor)},
              {"map", r.map},
              {"tolerances", tolerances_to_json(r.tol)},
              {"wolff", wolff_to_json(r.wolff)},
              {"verdict", r.verdict},
              {"limit_points",
               {{"orbits", orbits},
                {"joint_clusters", static_cast<int>(r.limits.joint.size())},
                {"shared_diameter", r.limits.shared_diameter}}},
              {"hypothesis_check", {{"status", r.hypothesis.status}, {"note", r.hypothesis.note}, {"points", points}}},
              {"capture",
               {{"checked", r.checked},
                {"captured", r.captured},
                {"worst_distance", r.worst_capture_distance},
                {"tolerance", r.tol.capture}}},
              {"escaped", r.escaped},
              {"all_captured", r.all_captured},
              {"conclusion", r.conclusion}};
    if (r.a0) {
        j["a0"] = element_to_json(*r.a0);
        j["s0"] = r.s0;
    }
    if (r.horocentre_component) j["horocentre_component"] = component_to_json(*r.horocentre_component);
    if (r.predicted) j["predicted_component"] = component_to_json(*r.predicted);
    return j;
}

HilbertAlternative hilbert_alternative(const SelfMap& f, const DynamicsConfig& cfg) {
    if (f.factor().kind() != Factor::Kind::hilbert)
        throw Error(ErrorCode::invalid_argument, "the Hilbert alternative needs a Hilbert factor");
    const DenjoyWolffReport r = denjoy_wolff_report(f, cfg);
    HilbertAlternative out;
    if (r.wolff.verdict == FixedPointVerdict::interior_fixed_point) {
        out.verdict = "interior dynamics";
        return out;
    }
    if (r.wolff.verdict != FixedPointVerdict::fixed_point_free) {
        out.verdict = "indeterminate";
        return out;
    }
    out.zeta = r.wolff.F->horocentre().element();
    for (const auto& o : r.limits.orbits) {
        for (const auto& c : o.clusters) {
            if (element_norm(c.centre) < 1.0 - cfg.tol.capture) out.interior_limits = true;
            out.max_distance = std::max(out.max_distance, element_norm(c.centre - *out.zeta));
        }
    }
    out.verdict = (!out.interior_limits && out.max_distance <= cfg.tol.capture) ? "boundary point" : "violated";
    return out;
}

std::string to_string(AppendixCase c) {
    switch (c) {
    case AppendixCase::a: return "case_a";
    case AppendixCase::b: return "case_b";
    case AppendixCase::c: return "case_c";
    }
    return "case_a";
}

AppendixCase appendix_case_from_string(const std::string& s) {
    if (s == "case_a" || s == "a") return AppendixCase::a;
    if (s == "case_b" || s == "b") return AppendixCase::b;
    if (s == "case_c" || s == "c") return AppendixCase::c;
    throw Error(ErrorCode::invalid_spec, "unknown scenario '" + s + "'");
}

SelfMap appendix_map(AppendixCase c, double b) {
    const Factor bidisc = Factor::polydisc(2);
    SelfMap f(bidisc);
    using P = SelfMap::PartMap;
    switch (c) {
    case AppendixCase::a: {
        CMat m(2, 2);
        m << 1.0, 0.0, 0.25, 0.5;
        f.coordwise({P::mobius(b), P::identity()}).affine(m, CVec::Zero(2));
        break;
    }
    case AppendixCase::b: f.coordwise({P::mobius(b), P::mobius(b)}); break;
    case AppendixCase::c: {
        CMat m(2, 2);
        m << 2.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0, 2.0 / 3.0;
        f.affine(m, CVec::Zero(2)).coordwise({P::mobius(b), P::mobius(b)});
        break;
    }
    }
    return f;
}

double disc_horofunction(cplx z) {
    if (z == cplx(1.0, 0.0)) return 0.0;
    return 1.0 / ((1.0 + z) / (1.0 - z)).real();
}

AppendixReport bidisc_appendix_suite(AppendixCase scenario, const DynamicsConfig& cfg, int decay_horizon) {
    const SelfMap f = appendix_map(scenario);
    AppendixReport out{scenario, denjoy_wolff_report(f, cfg), {}, false, false, false};
    const auto& dw = out.dw;
    if (dw.wolff.verdict != FixedPointVerdict::fixed_point_free || !dw.wolff.F) return out;
    const HorofunctionData& F = *dw.wolff.F;
    const Tolerances& tol = cfg.tol;

    // Coordinate and phase of each frame element.
    std::vector<int> coord;
    std::vector<cplx> phase;
    for (const auto& e : F.frame()) {
        int k = std::abs(e[0]) >= std::abs(e[1]) ? 0 : 1;
        coord.push_back(k);
        phase.push_back(e[k]);
    }
    const int p1 = coord.front();
    const int p2 = 1 - p1;
    auto closed_form = [&](const Element& z) {
        double v = 0.0;
        for (int i = 0; i < F.q(); ++i)
            v = std::max(v, F.sigma()[i] * disc_horofunction(std::conj(phase[i]) * z[coord[i]]));
        return v;
    };

    out.dichotomy_ok = true;
    out.decay_ok = true;
    for (const auto& o : dw.limits.orbits) {
        AppendixStart s{"neither", 1.0, 1.0, -1, 0.0, 0.0};
        for (std::size_t n = o.tail_start; n < o.points.size(); ++n) {
            s.pi1_tail_min = std::min(s.pi1_tail_min, std::abs(o.points[n][p1]));
            s.pi2_tail_min = std::min(s.pi2_tail_min, std::abs(o.points[n][p2]));
        }
        const double edge = 1.0 - tol.capture;
        if (s.pi1_tail_min >= edge && s.pi2_tail_min >= edge)
            s.label = "extreme";
        else if (s.pi1_tail_min >= edge)
            s.label = "extreme0";
        const int horizon = std::min<int>(decay_horizon, static_cast<int>(o.points.size()) - 1);
        for (int m = 0; m <= horizon; ++m) {
            const Element& z = o.points[m];
            const double cf = closed_form(z);
            if (s.decay_index < 0 && cf <= 1e-3) s.decay_index = m;
            s.decay_value = cf;
            if (element_norm(z) < 1.0 - 1e-6) {
                const double lib = eval_F_bisect(F, z, tol);
                s.closed_form_residual = std::max(s.closed_form_residual, std::abs(lib - cf) / std::max(1.0, cf));
            }
        }
        if (s.label == "neither") out.dichotomy_ok = false;
        if (s.decay_index < 0) out.decay_ok = false;
        out.starts.push_back(s);
    }
    out.passed = out.dichotomy_ok && out.decay_ok && dw.all_captured;
    return out;
}

json appendix_to_json(const AppendixReport& r) {
    json starts = json::array();
    for (const auto& s : r.starts)
        starts.push_back({{"label", s.label},
                          {"pi1_tail_min", s.pi1_tail_min},
                          {"pi2_tail_min", s.pi2_tail_min},
                          {"decay_index", s.decay_index},
                          {"decay_value", s.decay_value},
                          {"closed_form_residual", s.closed_form_residual}});
    return {{"scenario", to_string(r.scenario)},
            {"report", report_to_json(r.dw)},
            {"starts", starts},
            {"dichotomy_ok", r.dichotomy_ok},
            {"decay_ok", r.decay_ok},
            {"passed", r.passed}};
}

}  // namespace symdom

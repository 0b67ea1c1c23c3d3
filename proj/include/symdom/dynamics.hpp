#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "symdom/boundary.hpp"
#include "symdom/horofunction.hpp"
#include "symdom/selfmap.hpp"

namespace symdom {

struct FixedPointResult {
    Element z;
    double residual;  // ||beta f(z) - z||
    int iterations;
    int newton_steps;
};

/// Fixed point of beta*f by iteration from 0, with Newton steps on a
/// finite-difference Jacobian when the iteration stalls. Throws
/// Error(iteration_cap) after 1e5 iterations.
FixedPointResult earle_hamilton(const SelfMap& f, double beta, const Tolerances& tol = {},
                                int max_iterations = 100000);

/// beta_k = 1 - 2^-k, k = 3..14
std::vector<double> default_beta_schedule();

enum class FixedPointVerdict { fixed_point_free, interior_fixed_point, indeterminate };
std::string to_string(FixedPointVerdict v);

struct WolffData {
    std::vector<double> beta;
    std::vector<FixedPointResult> fixed_points;
    FixedPointVerdict verdict = FixedPointVerdict::indeterminate;
    std::optional<Element> interior_point;  // set for interior_fixed_point
    std::optional<HorofunctionData> F;      // set for fixed_point_free
    std::optional<SigmaEstimate> sigma;
    std::optional<Element> zeta;            // extrapolated limit of the z_k
    int invariance_samples = 0;
    double invariance_margin = 0.0;    // max F(f(x)) - F(x)
    double invariance_relative = 0.0;  // max (F(f(x)) - F(x)) / F(x)
    std::string note;
};

/// Wolff construction: z_k with beta_k f(z_k) = z_k, the horofunction of the
/// z_k and its invariance margin on seeded samples of norm at most 0.95.
WolffData wolff(const SelfMap& f, const std::vector<double>& schedule, std::uint64_t seed, int samples = 500,
                const Tolerances& tol = {});

struct TailCluster {
    Element centre;
    int count;
    double diameter;
};

/// Complete-linkage clustering in the triple norm, in input order.
std::vector<TailCluster> cluster_points(const std::vector<Element>& pts, double tol);

struct OrbitRecord {
    Element start;
    std::vector<Element> points;          // f^n(a), n = 0..N
    std::vector<double> norms;
    std::vector<double> kobayashi_steps;  // kappa(f^n a, f^{n+1} a); infinite once the orbit saturates
    int stagnation_index = 0;             // norms are non-decreasing from here on
    double max_norm = 0.0;
    int tail_start = 0;
    std::vector<TailCluster> clusters;
    bool finite_omega = true;  // false when the tail does not collapse into few clusters
};

/// Iterates f on the closed ball (iterates may round onto the sphere) and
/// clusters the last quarter of the orbit.
OrbitRecord orbit(const SelfMap& f, const Element& a, int N, const Tolerances& tol = {});

struct JointCluster {
    std::vector<Element> values;  // one value per start
    int count;
};

struct LimitFunctions {
    std::vector<OrbitRecord> orbits;
    std::vector<JointCluster> joint;  // tuples (f^n a_1, ..., f^n a_m) clustered over shared n
    double shared_diameter = 0.0;     // largest distance between cluster centres across all starts
};

LimitFunctions limit_functions(const SelfMap& f, const std::vector<Element>& starts, int N,
                               const Tolerances& tol = {});

struct LimitPointClass {
    Element point;
    Element tripotent_part;
    std::optional<TripotentFlags> flags;
    bool extended_shilov = false;
};

struct HypothesisCheck {
    std::string status;  // "holds", "fails: ...", "indeterminate: ..."
    std::vector<LimitPointClass> points;
    std::string note;
};

/// Classifies the tripotent parts of the limit clusters of one orbit.
HypothesisCheck check_limit_hypothesis(const Factor& f, const std::vector<TailCluster>& clusters,
                                       const Tolerances& tol = {});

struct DynamicsConfig {
    std::vector<double> beta_schedule = default_beta_schedule();
    std::vector<Element> starts;  // empty: seeded random starts
    int random_starts = 9;
    double start_radius = 0.9;
    int iterations = 200;
    std::uint64_t seed = 1;
    int invariance_samples = 500;
    double a0_hororadius = 0.5;
    Tolerances tol;
};

struct DenjoyWolffReport {
    Factor factor;
    nlohmann::json map;
    WolffData wolff;
    std::string verdict;
    std::optional<Element> a0;
    double s0 = 0.0;                                     // F(a0)
    std::optional<BoundaryComponent> horocentre_component;
    std::optional<BoundaryComponent> predicted;          // component of the truncated horocentre
    LimitFunctions limits;
    HypothesisCheck hypothesis;
    int captured = 0;
    int checked = 0;
    double worst_capture_distance = 0.0;
    bool escaped = false;  // every orbit reached norm 1 - 1e-4
    bool all_captured = false;
    std::string conclusion;
    Tolerances tol;
};

/// cfg.starts, or cfg.random_starts seeded points of norm below cfg.start_radius.
std::vector<Element> resolve_starts(const Factor& f, const DynamicsConfig& cfg);

DenjoyWolffReport denjoy_wolff_report(const SelfMap& f, const DynamicsConfig& cfg);
nlohmann::json report_to_json(const DenjoyWolffReport& r);

struct HilbertAlternative {
    std::string verdict;  // "boundary point", "interior dynamics", "violated"
    std::optional<Element> zeta;
    double max_distance = 0.0;  // from tail clusters to zeta
    bool interior_limits = false;
};

/// On a Hilbert ball: every limit value is the single boundary point zeta
/// unless f has an interior fixed point.
HilbertAlternative hilbert_alternative(const SelfMap& f, const DynamicsConfig& cfg);

enum class AppendixCase { a, b, c };
std::string to_string(AppendixCase c);
AppendixCase appendix_case_from_string(const std::string& s);
/// (a): (psi_b(x), psi_b(x)/4 + y/2); (b): (psi_b(x), psi_b(y));
/// (c): psi_b applied to both coordinates of ((2x+y)/3, (x+2y)/3).
SelfMap appendix_map(AppendixCase c, double b = 0.5);

struct AppendixStart {
    std::string label;  // "extreme", "extreme0" or "neither"
    double pi1_tail_min;
    double pi2_tail_min;
    int decay_index;             // first m with F_c(f^m a) <= 1e-3, or -1
    double decay_value;          // F_c(f^m a) at the last iterate checked
    double closed_form_residual; // library F against the closed form along the orbit
};

struct AppendixReport {
    AppendixCase scenario;
    DenjoyWolffReport dw;
    std::vector<AppendixStart> starts;
    bool dichotomy_ok = false;
    bool decay_ok = false;
    bool passed = false;
};

/// |1-z|^2/(1-|z|^2) written as 1/Re((1+z)/(1-z)); zero at z = 1.
double disc_horofunction(cplx z);

AppendixReport bidisc_appendix_suite(AppendixCase scenario, const DynamicsConfig& cfg, int decay_horizon = 60);
nlohmann::json appendix_to_json(const AppendixReport& r);

}  // namespace symdom

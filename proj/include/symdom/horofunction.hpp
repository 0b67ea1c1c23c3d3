#pragma once

#include <memory>
#include <vector>

#include "json.hpp"
#include "symdom/boundary.hpp"
#include "symdom/opnorm.hpp"
#include "symdom/peirce.hpp"

namespace symdom {

/// Limit data of a horofunction: a frame of orthogonal minimal tripotents
/// e_1..e_q with weights 1 = sigma_1 >= ... >= sigma_q > 0, the horocentre
/// c = sum e_i, and the joint Peirce projections of the frame.
class HorofunctionData {
public:
    static HorofunctionData from_limit_data(std::vector<Element> frame, std::vector<double> sigma,
                                            const Tolerances& tol = {});

    const Factor& factor() const;
    int q() const;
    const std::vector<Element>& frame() const;
    const std::vector<double>& sigma() const;
    std::vector<double> rho() const;
    const Tripotent& horocentre() const;
    const JointPeirce& peirce() const;

    /// c_s = sum sigma_j / (sigma_j + s) e_j
    Element centre(double s) const;
    /// B_s^r with B_s = B(w, w), w = sum sqrt(sigma_j / (sigma_j + s)) e_j.
    CMat bergman_s_power(double s, double r) const;
    /// ||B_s^{-1/2}(x - c_s)||; below 1 exactly on the open horoball.
    double membership_value(double s, const Element& x) const;

private:
    struct State;
    explicit HorofunctionData(std::shared_ptr<const State> s) : s_(std::move(s)) {}
    std::shared_ptr<const State> s_;
};

nlohmann::json horofunction_to_json(const HorofunctionData& F);
HorofunctionData horofunction_from_json(const nlohmann::json& j, const Factor& f, const Tolerances& tol = {});

/// y_k = sum alpha_ki e_i with alpha_k1^2 = 1 - t_k and 1 - alpha_ki^2 = t_k / sigma_i.
struct EvaluatingSequence {
    HorofunctionData F;
    std::vector<double> t;

    /// t_k = 2^-k for k = k0 .. k0 + count - 1, with k0 >= 10 raised until t < sigma_q / 4.
    static EvaluatingSequence standard(const HorofunctionData& F, int count = 21);
    Element element(double t) const;
};

struct SequenceEstimate {
    double value;
    double error;  // spread between neighbouring extrapolants at the chosen index
    bool converged;
};

SequenceEstimate eval_F_sequence_detail(const HorofunctionData& F, const Element& x, const Tolerances& tol = {});
double eval_F_sequence(const HorofunctionData& F, const Element& x, const Tolerances& tol = {});
/// inf{ s : ||B_s^{-1/2}(x - c_s)|| <= 1 } by bisection; the normative evaluator.
double eval_F_bisect(const HorofunctionData& F, const Element& x, const Tolerances& tol = {});
/// || sum_{1<=i<=j<=q} rho_i rho_j B(x,x)^{-1/2} B(x,c) P_ij ||
OpNormEstimate eval_F_opnorm(const HorofunctionData& F, const Element& x, const Tolerances& tol = {});
/// (1/2) log F
double gromov_h(const HorofunctionData& F, const Element& x, const Tolerances& tol = {});

class Horoball {
public:
    Horoball(HorofunctionData F, double s);

    const HorofunctionData& horofunction() const { return F_; }
    double s() const { return s_; }
    const Element& centre() const { return centre_; }
    /// B(w,w) with w = sum sqrt(sigma_j/(sigma_j+s)) e_j
    RealLinOp bergman_operator() const;
    double membership_value(const Element& x) const { return F_.membership_value(s_, x); }
    bool contains(const Element& x) const { return membership_value(x) < 1.0; }
    bool closed_contains(const Element& x, double tol) const { return membership_value(x) <= 1.0 + tol; }
    /// s / (1 + s): the ball of this radius about the centre lies inside.
    double inner_radius() const { return s_ / (1.0 + s_); }
    /// ||B_s^{1/2}||: the horoball lies inside the ball of this radius.
    OpNormEstimate outer_radius() const;

private:
    HorofunctionData F_;
    double s_;
    Element centre_;
};

Horoball horoball(const HorofunctionData& F, double s);
bool horoball_contains(const Horoball& H, const Element& x);

/// The component of the horocentre, whose closure is the intersection of all
/// closed horoballs.
BoundaryComponent closed_intersection_component(const HorofunctionData& F, const Tolerances& tol = {});

struct ClosedIntersectionCheck {
    int inside_samples = 0;
    int inside_failures = 0;   // closure points rejected by some closed horoball
    double worst_inside = 0.0; // largest membership value seen on closure points
    int far_samples = 0;
    int far_failures = 0;      // far points accepted by the smallest horoball
    double smallest_far = 0.0; // smallest membership value of far points at the smallest s
    bool passed() const { return inside_failures == 0 && far_failures == 0; }
};

/// Samples the closure of the horocentre component and checks closed
/// membership for every s in s_list; then samples points of the closed ball
/// whose distance to that closure is at least far_distance (certified by
/// ||P2(c)x - c|| or ||P1(c)x||) and checks they fail at the smallest s.
ClosedIntersectionCheck check_closed_intersection(const HorofunctionData& F, const std::vector<double>& s_list,
                                                  int samples, double far_distance, std::uint64_t seed,
                                                  const Tolerances& tol = {});

struct SigmaDiagnostics {
    bool aligned = true;
    double worst_alignment = 0.0;              // max of 1 - |overlap| over matched pairs
    std::vector<double> raw_sigma;             // extrapolated value per track before truncation
    std::vector<double> extrapolation_error;   // per track
    int truncated = 0;
};

struct SigmaEstimate {
    std::vector<Element> frame;
    std::vector<double> sigma;
    Element limit;  // extrapolated limit of the sequence
    SigmaDiagnostics diagnostics;
};

/// Tracks the spectral frames of a boundary-convergent sequence and
/// extrapolates sigma_i = lim (1 - alpha_k1^2)/(1 - alpha_ki^2) to t = 0.
SigmaEstimate estimate_sigma_from_sequence(const std::vector<Element>& z, const Tolerances& tol = {});

}  // namespace symdom

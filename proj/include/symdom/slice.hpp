#pragma once

#include <vector>

#include "json.hpp"
#include "symdom/horofunction.hpp"

namespace symdom {

/// The affine plane origin + u_param * u + v_param * v, sampled on a
/// steps x steps grid over [lo, hi]^2.
struct Slice {
    Element origin;
    Element u;
    Element v;
    double lo = -1.0;
    double hi = 1.0;
    int steps = 101;

    Element point(double a, double b) const { return origin + u * a + v * b; }
    double parameter(int i) const { return steps == 1 ? lo : lo + (hi - lo) * i / (steps - 1); }
};

nlohmann::json slice_to_json(const Slice& s);
Slice slice_from_json(const nlohmann::json& j, const Factor& f);

struct GridRow {
    double u;
    double v;
    Element x;
    bool in_ball;
    double F;                 // NaN outside the ball
    std::vector<bool> member; // one flag per hororadius
};

/// F and horoball membership on the slice; points outside the open ball are
/// kept with in_ball = false.
std::vector<GridRow> horoball_grid(const HorofunctionData& F, const Slice& slice, const std::vector<double>& s_list,
                                   const Tolerances& tol = {});

}  // namespace symdom

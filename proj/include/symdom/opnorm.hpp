#pragma once

#include <cstdint>

#include "symdom/linop.hpp"

namespace symdom {

struct OpNormEstimate {
    double value;  // exact norm, or the best value found by ascent
    double lower;  // certified: attained by an explicit unit vector
    double upper;  // norm-equivalence bound; equals value when exact
    bool exact;
};

/// Operator norm with respect to the triple norm on domain and codomain.
/// Exact on Hilbert factors and polydiscs; elsewhere a multi-start dual
/// ascent (20 starts, at most 200 steps each) that only ever reports values
/// attained by unit vectors.
OpNormEstimate op_norm_estimate(const RealLinOp& t, std::uint64_t seed = 0x5eed0f0bu);
double op_norm(const RealLinOp& t);

/// c1, c2 with c1 |x|_2 <= ||x|| <= c2 |x|_2 for the coordinate norm |.|_2.
std::pair<double, double> norm_equivalence(const Factor& f);

/// A unit-norm x maximising Re<h, x> over the closed unit ball.
CVec dual_argmax(const Factor& f, const CVec& h);

}  // namespace symdom

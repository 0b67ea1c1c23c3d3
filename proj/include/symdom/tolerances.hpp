#pragma once

#include <string>
#include <vector>

namespace symdom {

/// Named numerical thresholds. Every field can be overridden by name from a
/// run configuration or from `--tol NAME=VALUE`.
struct Tolerances {
    double identity = 1e-10;        // relative residual for algebraic identities
    double tripotent = 1e-8;        // ||{e,e,e} - e|| and | ||e|| - 1 |
    double cluster = 1e-8;          // relative gap below which spectral values are grouped
    double rank = 1e-8;             // singular values above this count towards a Peirce dimension
    double unit_threshold = 1e-6;   // alpha >= 1 - unit_threshold counts as 1
    double sigma_floor = 1e-9;      // truncation of vanishing sigma_i
    double closure = 1e-6;          // closed horoball / component closure membership
    double cluster_tol = 1e-3;      // tail clustering of orbits
    double eh_tol = 1e-12;          // fixed-point residual ||beta f(z) - z|| at which iteration stops
    double invariance = 1e-6;       // relative slack in F(f(x)) <= F(x)
    double bisect = 1e-10;          // absolute tolerance of the horofunction bisection
    double sequence_fluct = 1e-4;   // allowed relative fluctuation of the extrapolated limit
    double capture = 1e-3;          // closure test applied to estimated limit points
    double norm_identity = 1e-8;    // identities between operator norms and metric invariance
    double inverse = 1e-9;          // g_{-a} o g_a = id and transvection factorisations
    double exact = 1e-12;           // closed-form coordinatewise formulas
    double cross_method = 1e-5;     // agreement of independent evaluators

    /// Sets a field by name; throws Error(invalid_spec) for unknown names or
    /// non-positive values.
    void set(const std::string& name, double value);
    double get(const std::string& name) const;
    static const std::vector<std::string>& names();

    bool operator==(const Tolerances&) const = default;
};

}  // namespace symdom

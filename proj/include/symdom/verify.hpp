#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"
#include "symdom/factor.hpp"
#include "symdom/tolerances.hpp"

namespace symdom {

enum Suite : unsigned {
    suite_algebra = 1u,   // triple identities, norms, spectra
    suite_peirce = 2u,    // Peirce and joint Peirce projections, Bergman operators
    suite_metric = 4u,    // transvections and the Kobayashi distance
    suite_boundary = 8u,  // boundary components and tripotent classes
    suite_all = 15u,
};

struct CheckResult {
    std::string name;
    double worst = 0.0;  // largest residual seen
    double tolerance = 0.0;
    int samples = 0;
    bool passed() const { return worst <= tolerance; }
};

struct VerifyReport {
    std::string factor;
    int trials = 0;
    std::uint64_t seed = 0;
    std::vector<CheckResult> checks;
    bool passed() const;
    const CheckResult* find(const std::string& name) const;
};

/// Runs the selected identity suites on seeded random elements of f.
VerifyReport verify_factor(const Factor& f, int trials, std::uint64_t seed, const Tolerances& tol = {},
                           unsigned suites = suite_all);
nlohmann::json verify_to_json(const VerifyReport& r);

}  // namespace symdom

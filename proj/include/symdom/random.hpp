#pragma once

#include <cstdint>

#include "symdom/factor.hpp"

namespace symdom {

/// Gaussian direction scaled to a uniformly drawn norm in [0, norm_cap).
/// Deterministic in the seed; norm_cap = 0 gives the zero element.
Element random_element(const Factor& f, double norm_cap, std::uint64_t seed);
Element random_element(const Factor& f, double norm_cap, Rng& rng);

/// Gaussian direction of triple norm exactly one.
Element random_unit(const Factor& f, Rng& rng);

}  // namespace symdom

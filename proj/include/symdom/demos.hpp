#pragma once

#include <string>
#include <vector>

#include "symdom/dynamics.hpp"
#include "symdom/slice.hpp"

namespace symdom {

struct Demo {
    std::string name;
    std::string description;
    SelfMap map;
    DynamicsConfig config;
    Slice slice;                  // horoball grid plane
    std::vector<double> s_list;   // hororadii for the grid
};

/// disc-hyperbolic, disc-affine, bidisc-case-a, bidisc-case-b, bidisc-case-c,
/// bidisc-rotation, hilbert3, spin4, rect22
std::vector<std::string> demo_names();
Demo make_demo(const std::string& name, std::uint64_t seed = 1);

}  // namespace symdom

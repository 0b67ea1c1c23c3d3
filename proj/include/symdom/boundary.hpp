#pragma once

#include "json.hpp"
#include "symdom/peirce.hpp"

namespace symdom {

Tripotent classify_tripotent(const Element& e, const Tolerances& tol = {});

/// Maximal or structural.
bool in_extended_shilov(const Tripotent& e);

/// The holomorphic boundary component c + (V0(c) n D) and its closure.
class BoundaryComponent {
public:
    explicit BoundaryComponent(Tripotent c) : c_(std::move(c)) {}

    const Tripotent& tripotent() const { return c_; }
    const Factor& factor() const { return c_.factor(); }
    /// c + P0(c) x
    Element canonical(const Element& x) const;
    /// ||P2(c)x - c|| <= tol, ||P1(c)x|| <= tol and ||P0(c)x|| <= 1 + tol.
    bool closure_contains(const Element& x, double tol) const;
    /// Equal defining tripotents up to tol.
    bool same_as(const BoundaryComponent& other, double tol = 1e-6) const;
    bool is_singleton() const { return c_.flags().maximal; }

private:
    Tripotent c_;
};

bool closure_contains(const BoundaryComponent& comp, const Element& x, double tol);

/// max(||P2(c)x - c||, ||P1(c)x||, ||P0(c)x|| - 1, 0): zero exactly on the closed face of c.
double face_distance(const BoundaryComponent& comp, const Element& x);

/// Sum of the spectral tripotents of xi whose values are within
/// unit_threshold of 1; the zero element when there are none.
Element tripotent_part(const Element& xi, const Tolerances& tol = {});

/// Component of the tripotent part of a boundary point; throws
/// Error(outside_ball) when xi lies strictly inside the ball.
BoundaryComponent component_of_boundary_point(const Element& xi, const Tolerances& tol = {});

nlohmann::json tripotent_to_json(const Tripotent& t);
/// {"tripotent": element, "peirce_dims": [d2,d1,d0], "flags": {...}}
nlohmann::json component_to_json(const BoundaryComponent& c);
BoundaryComponent component_from_json(const nlohmann::json& j, const Factor& f, const Tolerances& tol = {});

}  // namespace symdom

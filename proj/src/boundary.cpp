#include "symdom/boundary.hpp"

#include <algorithm>

#include "symdom/serialize.hpp"
#include "symdom/spectral.hpp"
#include "symdom/triple.hpp"

namespace symdom {

Tripotent classify_tripotent(const Element& e, const Tolerances& tol) { return Tripotent::make(e, tol); }

bool in_extended_shilov(const Tripotent& e) { return e.flags().maximal || e.flags().structural; }

Element BoundaryComponent::canonical(const Element& x) const {
    return c_.element() + c_.projection(0).apply(x);
}

bool BoundaryComponent::closure_contains(const Element& x, double tol) const {
    require_same_factor(x, c_.element());
    if (element_norm(c_.projection(2).apply(x) - c_.element()) > tol) return false;
    if (element_norm(c_.projection(1).apply(x)) > tol) return false;
    return element_norm(c_.projection(0).apply(x)) <= 1.0 + tol;
}

bool BoundaryComponent::same_as(const BoundaryComponent& other, double tol) const {
    if (other.factor() != factor()) return false;
    return element_norm(other.c_.element() - c_.element()) <= tol;
}

bool closure_contains(const BoundaryComponent& comp, const Element& x, double tol) {
    return comp.closure_contains(x, tol);
}

double face_distance(const BoundaryComponent& comp, const Element& x) {
    const Tripotent& c = comp.tripotent();
    const double d2 = element_norm(c.projection(2).apply(x) - c.element());
    const double d1 = element_norm(c.projection(1).apply(x));
    const double d0 = element_norm(c.projection(0).apply(x)) - 1.0;
    return std::max({d2, d1, d0, 0.0});
}

Element tripotent_part(const Element& xi, const Tolerances& tol) {
    Element c = Element::zero(xi.factor());
    for (const auto& t : spectral_decomposition(xi, tol).terms)
        if (t.alpha >= 1.0 - tol.unit_threshold) c = c + t.e;
    return c;
}

BoundaryComponent component_of_boundary_point(const Element& xi, const Tolerances& tol) {
    const double n = element_norm(xi);
    if (n < 1.0 - tol.unit_threshold)
        throw Error(ErrorCode::outside_ball, "boundary point expected, norm is " + std::to_string(n));
    return BoundaryComponent(Tripotent::make(tripotent_part(xi, tol), tol));
}

nlohmann::json tripotent_to_json(const Tripotent& t) {
    const auto& d = t.peirce_dims();
    const auto& fl = t.flags();
    return {{"tripotent", element_to_json(t.element())},
            {"peirce_dims", {d[0], d[1], d[2]}},
            {"flags",
             {{"minimal", fl.minimal}, {"maximal", fl.maximal}, {"structural", fl.structural}, {"unitary", fl.unitary}}}};
}

nlohmann::json component_to_json(const BoundaryComponent& c) { return tripotent_to_json(c.tripotent()); }

BoundaryComponent component_from_json(const nlohmann::json& j, const Factor& f, const Tolerances& tol) {
    require_keys(j, {"tripotent", "peirce_dims", "flags"}, "component");
    return BoundaryComponent(Tripotent::make(element_from_json(require_field(j, "tripotent", "component"), f), tol));
}

}  // namespace symdom

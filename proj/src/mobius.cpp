#include "symdom/mobius.hpp"

#include <cmath>
#include <limits>

#include "symdom/peirce.hpp"
#include "symdom/triple.hpp"

namespace symdom {

cplx mobius(cplx b, cplx z) { return (b + z) / (1.0 + std::conj(b) * z); }

void require_open_ball(const Element& x, const char* what) {
    const double n = element_norm(x);
    if (!(n < 1.0))
        throw Error(ErrorCode::outside_ball, std::string(what) + " must lie in the open unit ball (norm " +
                                                 std::to_string(n) + ")");
}

Transvection::Transvection(Element a, const Tolerances& tol) : a_(std::move(a)) {
    require_open_ball(a_, "transvection point");
    sqrt_b_ = bergman_power(a_, 0.5, tol).complex_matrix();
}

Element Transvection::eval(const Element& x) const {
    require_same_factor(x, a_);
    const int n = x.factor().dim();
    const CMat m = CMat::Identity(n, n) + box(x, a_).complex_matrix();
    const CVec y = m.partialPivLu().solve(x.coords());
    return Element(x.factor(), a_.coords() + sqrt_b_ * y);
}

Element Transvection::operator()(const Element& x) const {
    require_open_ball(x, "transvection argument");
    return eval(x);
}

Element Transvection::apply_closed(const Element& x) const {
    const double n = element_norm(x);
    if (!(n <= 1.0 + 1e-12))
        throw Error(ErrorCode::outside_ball, "transvection argument outside the closed ball");
    return eval(x);
}

Element transvection_apply(const Element& a, const Element& x, const Tolerances& tol) {
    return Transvection(a, tol)(x);
}

double kobayashi(const Element& z, const Element& w, const Tolerances& tol) {
    require_open_ball(w, "kobayashi argument");
    const double r = element_norm(transvection_apply(-z, w, tol));
    if (r >= 1.0) return std::numeric_limits<double>::infinity();
    return std::atanh(r);
}

}  // namespace symdom

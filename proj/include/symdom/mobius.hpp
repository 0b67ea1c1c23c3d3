#pragma once

#include "symdom/factor.hpp"
#include "symdom/tolerances.hpp"

namespace symdom {

/// psi_b(z) = (b + z) / (1 + conj(b) z), the disc transvection.
cplx mobius(cplx b, cplx z);

/// g_a(x) = a + B(a,a)^{1/2} (I + x[]a)^{-1} x with B(a,a)^{1/2} cached.
class Transvection {
public:
    explicit Transvection(Element a, const Tolerances& tol = {});

    const Element& point() const { return a_; }
    /// Requires ||x|| < 1.
    Element operator()(const Element& x) const;
    /// Accepts ||x|| <= 1 + 1e-12; the formula extends continuously to the
    /// closed ball because ||x[]a|| <= ||x|| ||a|| < 1.
    Element apply_closed(const Element& x) const;

private:
    Element a_;
    CMat sqrt_b_;
    Element eval(const Element& x) const;
};

Element transvection_apply(const Element& a, const Element& x, const Tolerances& tol = {});

/// kappa(z,w) = atanh ||g_{-z}(w)||
double kobayashi(const Element& z, const Element& w, const Tolerances& tol = {});

/// Throws Error(outside_ball) unless ||x|| < 1.
void require_open_ball(const Element& x, const char* what);

}  // namespace symdom

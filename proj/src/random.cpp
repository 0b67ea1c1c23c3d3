#include "symdom/random.hpp"

#include "symdom/triple.hpp"

namespace symdom {

namespace {

CVec gaussian(int n, Rng& rng) {
    std::normal_distribution<double> g(0.0, 1.0);
    CVec v(n);
    for (int k = 0; k < n; ++k) {
        const double re = g(rng);
        const double im = g(rng);
        v[k] = cplx(re, im);
    }
    return v;
}

}  // namespace

Element random_unit(const Factor& f, Rng& rng) {
    CVec v = gaussian(f.dim(), rng);
    double n = norm_coords(f, v);
    while (n == 0.0) {
        v = gaussian(f.dim(), rng);
        n = norm_coords(f, v);
    }
    return Element(f, v / n);
}

Element random_element(const Factor& f, double norm_cap, Rng& rng) {
    if (norm_cap < 0.0) throw Error(ErrorCode::invalid_argument, "norm_cap must be non-negative");
    if (norm_cap == 0.0) return Element::zero(f);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    const Element dir = random_unit(f, rng);
    const double r = norm_cap * u(rng);
    Element x = dir * r;
    const double n = element_norm(x);
    if (n > norm_cap) x = x * (norm_cap / n) * (1.0 - 1e-15);
    return x;
}

Element random_element(const Factor& f, double norm_cap, std::uint64_t seed) {
    Rng rng(seed);
    return random_element(f, norm_cap, rng);
}

}  // namespace symdom

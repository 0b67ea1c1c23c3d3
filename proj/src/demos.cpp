#include "symdom/demos.hpp"

#include <cmath>

namespace symdom {

namespace {

using P = SelfMap::PartMap;

// Real rotation by theta in the (i, j) coordinate plane.
CMat plane_rotation(int dim, int i, int j, double theta) {
    CMat r = CMat::Identity(dim, dim);
    r(i, i) = r(j, j) = std::cos(theta);
    r(i, j) = -std::sin(theta);
    r(j, i) = std::sin(theta);
    return r;
}

Slice plane(const Factor& f, int i, cplx ui, int j, cplx vj) {
    CVec u = CVec::Zero(f.dim()), v = CVec::Zero(f.dim());
    u[i] = ui;
    v[j] = vj;
    return Slice{Element::zero(f), Element(f, u), Element(f, v), -1.0, 1.0, 101};
}

}  // namespace

std::vector<std::string> demo_names() {
    return {"disc-hyperbolic", "disc-affine",     "bidisc-case-a", "bidisc-case-b", "bidisc-case-c",
            "bidisc-rotation", "hilbert3",        "spin4",         "rect22"};
}

Demo make_demo(const std::string& name, std::uint64_t seed) {
    DynamicsConfig cfg;
    cfg.seed = seed;
    const std::vector<double> s_list{0.5, 1.0, 2.0};

    if (name == "disc-hyperbolic" || name == "disc-affine") {
        const Factor disc = Factor::polydisc(1);
        SelfMap f(disc);
        if (name == "disc-hyperbolic") {
            f.coordwise({P::mobius(0.5)});
            return {name, "psi_1/2(z) = (z + 1/2)/(1 + z/2)", f, cfg, plane(disc, 0, 1.0, 0, cplx(0, 1)), s_list};
        }
        f.coordwise({P::affine(0.5, 0.5)});
        return {name, "(z + 1)/2", f, cfg, plane(disc, 0, 1.0, 0, cplx(0, 1)), s_list};
    }
    if (name == "bidisc-case-a" || name == "bidisc-case-b" || name == "bidisc-case-c") {
        const AppendixCase c = appendix_case_from_string(std::string(1, name.back()));
        SelfMap f = appendix_map(c);
        const char* desc = c == AppendixCase::a   ? "(psi(x), psi(x)/4 + y/2), psi = psi_1/2"
                           : c == AppendixCase::b ? "(psi(x), psi(y)), psi = psi_1/2"
                                                  : "(psi((2x+y)/3), psi((x+2y)/3)), psi = psi_1/2";
        return {name, desc, f, cfg, plane(f.factor(), 0, 1.0, 1, 1.0), s_list};
    }
    if (name == "bidisc-rotation") {
        const Factor bidisc = Factor::polydisc(2);
        SelfMap f(bidisc);
        f.coordwise({P::mobius(0.5), P::identity()}).permutation({0, 1}, {1.0, std::polar(1.0, 1.0)});
        return {name, "(psi_1/2(x), e^{i} y)", f, cfg, plane(bidisc, 0, 1.0, 1, 1.0), s_list};
    }
    if (name == "hilbert3") {
        const Factor h = Factor::hilbert(3);
        SelfMap f(h);
        f.isometry(plane_rotation(3, 1, 2, 1.0)).transvection(Element::basis(h, 0) * 0.5);
        return {name, "g_{e1/2} after a rotation fixing e1", f, cfg, plane(h, 0, 1.0, 1, 1.0), s_list};
    }
    if (name == "spin4") {
        const Factor s = Factor::spin(4);
        SelfMap f(s);
        f.isometry(plane_rotation(4, 2, 3, 1.0)).transvection(Element::basis(s, 0) * (0.5 * std::sqrt(2.0)));
        return {name, "g_{u/2} after a rotation fixing the maximal tripotent u", f, cfg,
                plane(s, 0, std::sqrt(2.0), 1, std::sqrt(2.0)), s_list};
    }
    if (name == "rect22") {
        const Factor r = Factor::rectangular(2, 2);
        SelfMap f(r);
        f.transvection(Element::basis(r, 0) * 0.5);
        return {name, "g_{E11/2} on 2x2 matrices", f, cfg, plane(r, 0, 1.0, 3, 1.0), s_list};
    }
    throw Error(ErrorCode::invalid_spec, "unknown demo '" + name + "'");
}

}  // namespace symdom

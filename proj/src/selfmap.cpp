#include "symdom/selfmap.hpp"

#include <cmath>

#include "symdom/linop.hpp"
#include "symdom/mobius.hpp"
#include "symdom/opnorm.hpp"
#include "symdom/random.hpp"
#include "symdom/serialize.hpp"
#include "symdom/triple.hpp"

namespace symdom {

using json = nlohmann::json;

namespace {

constexpr double closed_slack = 1e-12;

json matrix_to_json(const CMat& m) {
    json rows = json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(complex_to_json(m(i, j)));
        rows.push_back(row);
    }
    return rows;
}

CMat matrix_from_json(const json& j, const std::string& where) {
    if (!j.is_array() || j.empty() || !j[0].is_array())
        throw Error(ErrorCode::invalid_spec, where + ": expected an array of rows");
    const auto rows = static_cast<Eigen::Index>(j.size());
    const auto cols = static_cast<Eigen::Index>(j[0].size());
    CMat m(rows, cols);
    for (Eigen::Index r = 0; r < rows; ++r) {
        const json& row = j[static_cast<std::size_t>(r)];
        if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != cols)
            throw Error(ErrorCode::invalid_spec, where + ": rows must have equal length");
        for (Eigen::Index c = 0; c < cols; ++c) m(r, c) = scalar_from_json(row[static_cast<std::size_t>(c)]);
    }
    return m;
}

bool is_unitary(const CMat& u, double tol) {
    return u.rows() == u.cols() && (u.adjoint() * u - CMat::Identity(u.rows(), u.cols())).norm() <= tol;
}

struct PartLayout {
    std::vector<int> dims;
    std::vector<int> offsets;
};

PartLayout layout_of(const Factor& f) {
    if (f.kind() != Factor::Kind::direct_sum) return {{f.dim()}, {0}};
    PartLayout out;
    for (const auto& p : f.parts()) out.dims.push_back(p.dim());
    out.offsets = f.offsets();
    return out;
}

}  // namespace

void SelfMap::push(std::string op, json spec, std::function<Element(const Element&)> fn) {
    stages_.push_back({std::move(op), std::move(spec), std::move(fn)});
}

Element SelfMap::operator()(const Element& x) const {
    require_same_factor(x, Element::zero(factor_));
    require_open_ball(x, "self-map argument");
    return apply_closed(x);
}

Element SelfMap::apply_closed(const Element& x) const {
    require_same_factor(x, Element::zero(factor_));
    if (element_norm(x) > 1.0 + closed_slack)
        throw Error(ErrorCode::outside_ball, "self-map argument lies outside the closed ball");
    Element y = x;
    for (const auto& s : stages_) y = s.fn(y);
    return y;
}

SelfMap& SelfMap::transvection(const Element& a, const Tolerances& tol) {
    require_same_factor(a, Element::zero(factor_));
    auto g = std::make_shared<const Transvection>(a, tol);
    push("transvection", {{"op", "transvection"}, {"a", element_to_json(a)}},
         [g](const Element& x) { return g->apply_closed(x); });
    return *this;
}

SelfMap& SelfMap::scale(cplx lambda) {
    if (std::abs(lambda) > 1.0 + closed_slack)
        throw Error(ErrorCode::invalid_argument, "scale factor must satisfy |lambda| <= 1");
    push("scale", {{"op", "scale"}, {"lambda", complex_to_json(lambda)}},
         [lambda](const Element& x) { return x * lambda; });
    return *this;
}

SelfMap& SelfMap::isometry(const CMat& u, const Tolerances& tol) {
    if (u.rows() != factor_.dim() || u.cols() != factor_.dim())
        throw Error(ErrorCode::invalid_argument, "isometry matrix has the wrong shape");
    const double defect = automorphism_defect(factor_, u);
    if (defect > tol.tripotent || !is_unitary(u, tol.tripotent))
        throw Error(ErrorCode::invalid_argument,
                    "isometry matrix is not a triple automorphism (defect " + std::to_string(defect) + ")");
    const Factor f = factor_;
    push("isometry", {{"op", "isometry"}, {"matrix", matrix_to_json(u)}},
         [f, u](const Element& x) { return Element(f, u * x.coords()); });
    return *this;
}

SelfMap& SelfMap::permutation(const std::vector<int>& perm, const std::vector<cplx>& phases) {
    if (!factor_.is_polydisc()) throw Error(ErrorCode::invalid_argument, "permutation isometries need a polydisc");
    const int d = factor_.dim();
    if (static_cast<int>(perm.size()) != d || static_cast<int>(phases.size()) != d)
        throw Error(ErrorCode::invalid_argument, "permutation and phases must have one entry per coordinate");
    std::vector<bool> seen(d, false);
    for (int p : perm) {
        if (p < 0 || p >= d || seen[p]) throw Error(ErrorCode::invalid_argument, "not a permutation");
        seen[p] = true;
    }
    for (cplx ph : phases)
        if (std::abs(std::abs(ph) - 1.0) > 1e-12) throw Error(ErrorCode::invalid_argument, "phases must be unimodular");
    json ph = json::array();
    for (cplx p : phases) ph.push_back(complex_to_json(p));
    const Factor f = factor_;
    push("isometry", {{"op", "isometry"}, {"perm", perm}, {"phases", ph}}, [f, perm, phases](const Element& x) {
        CVec y(x.dim());
        for (int k = 0; k < x.dim(); ++k) y[k] = phases[k] * x[perm[k]];
        return Element(f, y);
    });
    return *this;
}

SelfMap& SelfMap::unitary_pair(const CMat& left, const CMat& right, const Tolerances& tol) {
    if (factor_.kind() != Factor::Kind::rectangular)
        throw Error(ErrorCode::invalid_argument, "left/right isometries need a rectangular factor");
    if (left.rows() != factor_.rows() || right.rows() != factor_.cols() || !is_unitary(left, tol.tripotent) ||
        !is_unitary(right, tol.tripotent))
        throw Error(ErrorCode::invalid_argument, "left and right factors must be unitary of matching size");
    const Factor f = factor_;
    push("isometry", {{"op", "isometry"}, {"left", matrix_to_json(left)}, {"right", matrix_to_json(right)}},
         [f, left, right](const Element& x) { return Element::from_matrix(f, left * x.as_matrix() * right); });
    return *this;
}

SelfMap& SelfMap::affine(const CMat& m, const CVec& offset) {
    if (m.rows() != factor_.dim() || m.cols() != factor_.dim() || offset.size() != factor_.dim())
        throw Error(ErrorCode::invalid_argument, "affine map has the wrong shape");
    const Factor f = factor_;
    const Element v(f, offset);
    const double nv = element_norm(v);
    const double nm = op_norm_estimate(RealLinOp::from_complex(f, m)).upper;
    if (nv >= 1.0 || nm + nv > 1.0 + closed_slack)
        throw Error(ErrorCode::invalid_argument, "affine map needs ||M|| + ||v|| <= 1 and ||v|| < 1 (got " +
                                                     std::to_string(nm) + " + " + std::to_string(nv) + ")");
    push("affine", {{"op", "affine"}, {"matrix", matrix_to_json(m)}, {"offset", element_to_json(v)}},
         [f, m, offset](const Element& x) { return Element(f, m * x.coords() + offset); });
    return *this;
}

SelfMap& SelfMap::coordwise(const std::vector<PartMap>& parts) {
    const PartLayout lay = layout_of(factor_);
    if (parts.size() != lay.dims.size())
        throw Error(ErrorCode::invalid_argument, "coordwise needs one map per part (" +
                                                     std::to_string(lay.dims.size()) + ")");
    json js = json::array();
    for (std::size_t p = 0; p < parts.size(); ++p) {
        const PartMap& pm = parts[p];
        if (pm.kind != PartMap::Kind::identity && lay.dims[p] != 1)
            throw Error(ErrorCode::invalid_argument, "coordwise disc maps need one-dimensional parts");
        switch (pm.kind) {
        case PartMap::Kind::identity: js.push_back({{"type", "identity"}}); break;
        case PartMap::Kind::mobius:
            if (std::abs(pm.b) >= 1.0) throw Error(ErrorCode::invalid_argument, "mobius parameter must satisfy |b| < 1");
            js.push_back({{"type", "mobius"}, {"b", complex_to_json(pm.b)}});
            break;
        case PartMap::Kind::affine:
            if (std::abs(pm.beta) >= 1.0 || std::abs(pm.alpha) + std::abs(pm.beta) > 1.0 + closed_slack)
                throw Error(ErrorCode::invalid_argument, "affine part needs |alpha| + |beta| <= 1 and |beta| < 1");
            js.push_back({{"type", "affine"}, {"alpha", complex_to_json(pm.alpha)}, {"beta", complex_to_json(pm.beta)}});
            break;
        }
    }
    const Factor f = factor_;
    push("coordwise", {{"op", "coordwise"}, {"parts", js}}, [f, parts, lay](const Element& x) {
        CVec y = x.coords();
        for (std::size_t p = 0; p < parts.size(); ++p) {
            const int k = lay.offsets[p];
            switch (parts[p].kind) {
            case PartMap::Kind::identity: break;
            case PartMap::Kind::mobius: y[k] = mobius(parts[p].b, y[k]); break;
            case PartMap::Kind::affine: y[k] = parts[p].alpha * y[k] + parts[p].beta; break;
            }
        }
        return Element(f, y);
    });
    return *this;
}

json selfmap_to_json(const SelfMap& f) {
    json pipeline = json::array();
    for (const auto& s : f.stages()) pipeline.push_back(s.spec);
    return {{"pipeline", pipeline}};
}

SelfMap selfmap_from_json(const json& j, const Factor& factor, const Tolerances& tol) {
    require_keys(j, {"pipeline"}, "map");
    const json& pipeline = require_field(j, "pipeline", "map");
    if (!pipeline.is_array()) throw Error(ErrorCode::invalid_spec, "map: 'pipeline' must be an array");
    SelfMap f(factor);
    for (const auto& st : pipeline) {
        const json& op = require_field(st, "op", "map stage");
        if (!op.is_string()) throw Error(ErrorCode::invalid_spec, "map stage: 'op' must be a string");
        const std::string name = op.get<std::string>();
        const std::string where = "map stage '" + name + "'";
        try {
            if (name == "transvection") {
                require_keys(st, {"op", "a"}, where);
                f.transvection(element_from_json(require_field(st, "a", where), factor), tol);
            } else if (name == "scale") {
                require_keys(st, {"op", "lambda"}, where);
                f.scale(scalar_from_json(require_field(st, "lambda", where)));
            } else if (name == "isometry") {
                if (st.contains("matrix")) {
                    require_keys(st, {"op", "matrix"}, where);
                    f.isometry(matrix_from_json(st.at("matrix"), where), tol);
                } else if (st.contains("perm")) {
                    require_keys(st, {"op", "perm", "phases"}, where);
                    const json& pj = st.at("perm");
                    const json& phj = require_field(st, "phases", where);
                    if (!pj.is_array() || !phj.is_array())
                        throw Error(ErrorCode::invalid_spec, where + ": 'perm' and 'phases' must be arrays");
                    std::vector<int> perm;
                    for (const auto& p : pj) {
                        if (!p.is_number_integer()) throw Error(ErrorCode::invalid_spec, where + ": bad 'perm' entry");
                        perm.push_back(p.get<int>());
                    }
                    std::vector<cplx> phases;
                    for (const auto& p : phj) phases.push_back(scalar_from_json(p));
                    f.permutation(perm, phases);
                } else {
                    require_keys(st, {"op", "left", "right"}, where);
                    f.unitary_pair(matrix_from_json(require_field(st, "left", where), where),
                                   matrix_from_json(require_field(st, "right", where), where), tol);
                }
            } else if (name == "affine") {
                require_keys(st, {"op", "matrix", "offset"}, where);
                CVec offset = CVec::Zero(factor.dim());
                if (st.contains("offset")) offset = element_from_json(st.at("offset"), factor).coords();
                f.affine(matrix_from_json(require_field(st, "matrix", where), where), offset);
            } else if (name == "coordwise") {
                require_keys(st, {"op", "parts"}, where);
                const json& parts = require_field(st, "parts", where);
                if (!parts.is_array()) throw Error(ErrorCode::invalid_spec, where + ": 'parts' must be an array");
                std::vector<SelfMap::PartMap> pm;
                for (const auto& p : parts) {
                    const json& t = require_field(p, "type", where);
                    const std::string type = t.is_string() ? t.get<std::string>() : "";
                    if (type == "identity") {
                        require_keys(p, {"type"}, where);
                        pm.push_back(SelfMap::PartMap::identity());
                    } else if (type == "mobius") {
                        require_keys(p, {"type", "b"}, where);
                        pm.push_back(SelfMap::PartMap::mobius(scalar_from_json(require_field(p, "b", where))));
                    } else if (type == "affine") {
                        require_keys(p, {"type", "alpha", "beta"}, where);
                        pm.push_back(SelfMap::PartMap::affine(scalar_from_json(require_field(p, "alpha", where)),
                                                              scalar_from_json(require_field(p, "beta", where))));
                    } else {
                        throw Error(ErrorCode::invalid_spec, where + ": unknown part type '" + type + "'");
                    }
                }
                f.coordwise(pm);
            } else {
                throw Error(ErrorCode::invalid_spec, "map: unknown op '" + name + "'");
            }
        } catch (const Error& e) {
            if (e.code() == ErrorCode::invalid_spec) throw;
            throw Error(ErrorCode::invalid_spec, where + ": " + e.what());
        }
    }
    return f;
}

double automorphism_defect(const Factor& f, const CMat& u, int samples, std::uint64_t seed) {
    Rng rng(seed);
    double worst = 0.0;
    for (int k = 0; k < samples; ++k) {
        const CVec x = random_unit(f, rng).coords();
        const CVec y = random_unit(f, rng).coords();
        const CVec z = random_unit(f, rng).coords();
        const CVec lhs = triple_coords(f, u * x, u * y, u * z);
        const CVec rhs = u * triple_coords(f, x, y, z);
        worst = std::max(worst, (lhs - rhs).cwiseAbs().maxCoeff());
    }
    return worst;
}

}  // namespace symdom

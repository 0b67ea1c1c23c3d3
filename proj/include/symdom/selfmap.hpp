#pragma once

#include <functional>
#include <string>
#include <vector>

#include "json.hpp"
#include "symdom/factor.hpp"
#include "symdom/tolerances.hpp"

namespace symdom {

/// One stage of a self-map pipeline. Every stage maps the open ball into
/// itself and extends continuously to the closed ball.
struct MapStage {
    std::string op;
    nlohmann::json spec;  // canonical form, reproduced by to_json
    std::function<Element(const Element&)> fn;
};

/// A holomorphic self-map of the unit ball, built as a composition of
/// transvections, scalings, triple automorphisms, coordinatewise disc maps and
/// contractive affine maps.
class SelfMap {
public:
    explicit SelfMap(Factor f) : factor_(std::move(f)) {}

    const Factor& factor() const { return factor_; }
    const std::vector<MapStage>& stages() const { return stages_; }
    bool empty() const { return stages_.empty(); }

    /// Requires ||x|| < 1.
    Element operator()(const Element& x) const;
    /// Accepts the closed ball, up to a 1e-12 overshoot.
    Element apply_closed(const Element& x) const;

    SelfMap& transvection(const Element& a, const Tolerances& tol = {});
    SelfMap& scale(cplx lambda);
    /// x -> U x for a complex matrix U that preserves the triple product.
    SelfMap& isometry(const CMat& u, const Tolerances& tol = {});
    /// Polydisc automorphism x -> (phase_k x_{perm[k]}).
    SelfMap& permutation(const std::vector<int>& perm, const std::vector<cplx>& phases);
    /// Rectangular automorphism X -> U X V with U, V unitary.
    SelfMap& unitary_pair(const CMat& left, const CMat& right, const Tolerances& tol = {});
    /// x -> M x + v with ||M||_op + ||v|| <= 1 and ||v|| < 1.
    SelfMap& affine(const CMat& m, const CVec& offset);

    /// Per-part one-dimensional map for direct sums; a factor that is not a sum
    /// counts as a single part.
    struct PartMap {
        enum class Kind { identity, mobius, affine } kind = Kind::identity;
        cplx b{};      // mobius
        cplx alpha{};  // affine: alpha z + beta, |alpha| + |beta| <= 1
        cplx beta{};
        static PartMap identity() { return {}; }
        static PartMap mobius(cplx b) { return {Kind::mobius, b, {}, {}}; }
        static PartMap affine(cplx alpha, cplx beta) { return {Kind::affine, {}, alpha, beta}; }
    };
    SelfMap& coordwise(const std::vector<PartMap>& parts);

private:
    Factor factor_;
    std::vector<MapStage> stages_;
    void push(std::string op, nlohmann::json spec, std::function<Element(const Element&)> fn);
};

/// {"pipeline": [...]} in the map DSL.
nlohmann::json selfmap_to_json(const SelfMap& f);
SelfMap selfmap_from_json(const nlohmann::json& j, const Factor& factor, const Tolerances& tol = {});

/// Largest ||{Ux,Uy,Uz} - U{x,y,z}|| over seeded random unit triples.
double automorphism_defect(const Factor& f, const CMat& u, int samples = 20, std::uint64_t seed = 11);

}  // namespace symdom

#pragma once

#include <vector>

#include "symdom/factor.hpp"
#include "symdom/tolerances.hpp"

namespace symdom {

struct SpectralTerm {
    double alpha;
    Element e;
    int cluster;  // terms with equal spectral value share a cluster id
};

/// a = sum alpha_i e_i with alpha descending and e_i mutually orthogonal
/// minimal tripotents. Terms inside one cluster are an arbitrary but
/// deterministic minimal splitting of the (unique) grouped tripotent.
struct SpectralDecomposition {
    std::vector<SpectralTerm> terms;

    bool empty() const { return terms.empty(); }
    std::size_t size() const { return terms.size(); }
    int cluster_count() const { return terms.empty() ? 0 : terms.back().cluster + 1; }
    /// One term per cluster: the mean spectral value and the summed tripotent.
    std::vector<SpectralTerm> grouped() const;
    Element reconstruct(const Factor& f) const;
};

SpectralDecomposition spectral_decomposition(const Element& a, const Tolerances& tol = {});

/// Deterministic ordering used to break ties inside a spectral cluster:
/// descending lexicographic on (Re, Im) of the coordinates.
bool lex_precedes(const CVec& a, const CVec& b);

}  // namespace symdom

#pragma once

#include <vector>

#include "cambpop/coxeter.hpp"

namespace cambpop {

// A Coxeter element as one reduced word per commutation class; the acyclic
// orientation of the Coxeter graph it induces is the invariant content.
struct CoxeterElement {
    std::vector<int> word;  // each simple index exactly once

    // orient[edge k] = true when the edge's smaller endpoint comes first
    std::vector<bool> orientation(const CoxeterDiagram& dia) const;
    CoxeterElement inverse() const;
};

// Validates the word, canonicalizes to the smallest-index topological sort
// of its orientation.
CoxeterElement make_coxeter_element(const CoxeterDiagram& dia, const std::vector<int>& word);

// One representative per acyclic orientation of the Coxeter graph, i.e.
// per commutation class; 2^(#edges) total for tree diagrams.
std::vector<CoxeterElement> all_coxeter_elements(const CoxeterDiagram& dia);

// c_1 (odd heap ranks) before c_2; see the bipartition in heaps.
CoxeterElement bipartite_coxeter_element(const CoxeterDiagram& dia);

// Linear element s_1 s_2 ... s_n (internal index order).
CoxeterElement linear_coxeter_element(const CoxeterDiagram& dia);

} // namespace cambpop

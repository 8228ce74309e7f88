#pragma once

#include <string>

#include "cambpop/cambrian.hpp"
#include "cambpop/coxelem.hpp"

namespace cambpop {

// Heap of a word: letters (kept distinct) ordered by forced precedence.
struct Heap {
    CoxeterDiagram dia;
    std::vector<int> letter;   // position -> simple index
    std::vector<int> occ;      // position -> occurrence count of that simple (1-based)
    std::vector<Bitset> below; // strict heap predecessors per position

    std::size_t size() const { return letter.size(); }
    std::vector<std::pair<int, int>> covers() const;
    bool is_order_ideal(const Bitset& sub) const;
};

Heap heap_of_word(const CoxeterDiagram& dia, const std::vector<int>& word);
bool commutation_equivalent(const CoxeterDiagram& dia, const std::vector<int>& w1,
                            const std::vector<int>& w2);

// rank of each simple in Heap(c), normalized to minimum 1
std::vector<int> heap_base_rank(const CoxeterDiagram& dia, const CoxeterElement& c);

// H_c = Heap(sort_c(w0)) carrying the rank function of Heap(c^h).
struct CambrianHeap {
    const CoxGroup* W = nullptr;
    CoxeterElement c;
    int h = 0;
    Heap heap;                  // heap of sort_c(w0)
    std::vector<int> sort_word; // sort_c(w0)
    std::vector<int> base_rank; // per simple, rank in Heap(c)
    std::vector<int> rank;      // per position: base_rank + 2(occ-1)

    Elt zeta(const Bitset& subset) const;   // product of the subword
    Bitset rank_ideal(int k) const;         // H^{<= k}
    std::vector<int> column(int k) const;   // Z(H^k), simple indices
    Elt z_c() const { return zeta(rank_ideal(h - 1)); }
    std::vector<Elt> orbit_elements() const;  // v_{h-1}, ..., v_0
};

CambrianHeap build_cambrian_heap(const CoxGroup& W, const CoxeterElement& c);

// X1 = odd heap ranks, X2 = even; a bipartition of the Coxeter graph.
std::pair<std::vector<int>, std::vector<int>> bipartition(const CoxeterDiagram& dia,
                                                          const CoxeterElement& c);

// u_k = c1 c2 c1 ... with k blocks (c1 = product over X1 etc.)
std::vector<int> u_word(const std::pair<std::vector<int>, std::vector<int>>& parts, int k);

bool verify_column_lemma(const CambrianHeap& hc);   // Z(H^{h-1}) = X_{eps(h-1)}
bool verify_descent_lemma(const CambrianHeap& hc);  // Z(H^k) = Des(zeta(H^{<=k}))

// Orbit of z_c under the Cambrian pop; must equal [v_{h-1}, ..., v_0].
std::vector<int> z_c_orbit(const CambrianLattice& camb, const CambrianHeap& hc);

// All order ideals of H_c (used for the spine identity); capped.
std::vector<Bitset> heap_order_ideals(const Heap& h, std::size_t cap = 1u << 20);

// Hasse diagram of H_c, rank-aligned, annotated with the root attached to
// each letter via the suffix-inversion bijection; letters whose root is a
// projective root carry a P marker.
std::string ar_quiver_dot(const CambrianHeap& hc);

// Suffix-inversion bijection letter -> positive root index.
std::vector<int> heap_root_bijection(const CambrianHeap& hc);

} // namespace cambpop

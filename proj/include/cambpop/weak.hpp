#pragma once

#include <unordered_map>

#include "cambpop/coxeter.hpp"
#include "cambpop/lattice.hpp"

namespace cambpop {

// Weak(W) as a FiniteLattice; lattice index <-> group element tables ride
// along.
struct WeakOrder {
    const CoxGroup* W = nullptr;
    FiniteLattice lat;
    std::vector<Elt> elem;                           // index -> element
    std::unordered_map<Bitset, int, BitsetHash> id;  // inv(w) -> index

    int index_of(const Elt& w) const;
    const Elt& at(int i) const { return elem[std::size_t(i)]; }
};

WeakOrder build_weak_lattice(const CoxGroup& W, std::size_t cap = 200000);

// pop of the weak order via x * w_circ(Des(x)); no lattice required.
Elt pop_weak(const CoxGroup& W, const Elt& w);

// Cover reflections as positive-root indices: t with tw <. w.
std::vector<int> cover_reflections(const CoxGroup& W, const Elt& w);

// Canonical join representation of w in Weak(W): for each cover reflection
// t, the minimal x <= w having t as a left inversion.  Needs the lattice.
std::vector<int> cjr_weak(const WeakOrder& wk, int w_index);

} // namespace cambpop

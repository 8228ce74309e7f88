#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cambpop/bitset.hpp"
#include "cambpop/errors.hpp"
#include "cambpop/poly.hpp"

namespace cambpop {

// Finite lattice on elements 0..n-1.  `below[x]` / `above[x]` include x.
// Meets are computed from downset bitsets; a failed meet (no unique maximum
// of the intersection) raises NotALattice.
class FiniteLattice {
public:
    int n = 0;
    std::vector<std::vector<int>> up, down;  // cover adjacency
    std::vector<Bitset> below, above;
    int bottom = -1, top = -1;

    static FiniteLattice from_covers(int n, const std::vector<std::pair<int, int>>& covers,
                                     bool validate = true);
    // leq_below[x] = set of y with y <= x (x included or not; x is added).
    static FiniteLattice from_below_sets(std::vector<Bitset> leq_below, bool validate = true);

    bool leq(int x, int y) const { return below[std::size_t(y)].test(std::size_t(x)); }

    int meet(int x, int y) const;
    int join(int x, int y) const;
    int meet_of(const std::vector<int>& xs) const;  // empty -> top
    int join_of(const std::vector<int>& xs) const;  // empty -> bottom

    int pop_down(int x) const;
    int pop_up(int x) const;
    std::vector<int> pop_orbit(int x) const;  // x, pop(x), ..., bottom
    std::vector<int> pop_up_orbit(int x) const;

    struct OrbitStats {
        int max_size = 0;
        std::vector<int> argmax;  // Upsilon_L
    };
    OrbitStats orbit_stats() const;

    std::vector<int> atoms() const { return up[std::size_t(bottom)]; }
    std::vector<int> coatoms() const { return down[std::size_t(top)]; }

    std::vector<int> pop_down_image() const;  // sorted, deduplicated
    std::vector<int> pop_up_image() const;

    FiniteLattice dual() const;

    // Induced interval [u,v] plus the map from interval indices to L.
    FiniteLattice interval(int u, int v, std::vector<int>* elems = nullptr) const;

    bool is_distributive() const;
    bool is_boolean() const;

    void build_op_tables() const;  // memoize meet/join (n^2 ints)

private:
    mutable std::vector<int> meet_tab_, join_tab_;
    void finalize(bool validate);
    int meet_raw(int x, int y) const;
    int join_raw(int x, int y) const;
};

bool is_boolean_interval(const FiniteLattice& L, int u, int v);
bool is_distributive_interval(const FiniteLattice& L, int u, int v);

// kappa bijection and per-edge shard labels of a finite semidistributive
// lattice.  Construction throws NotSemidistributive when existence or
// uniqueness fails.
struct ShardLabeling {
    std::vector<int> jirr, mirr;   // element ids
    std::vector<int> kappa_of;     // element -> element (-1 off jirr)
    std::vector<int> kappa_inv;    // element -> element (-1 off mirr)
    // label_up[x][k] = shard label (a join-irreducible element) of the edge
    // x <. up[x][k]
    std::vector<std::vector<int>> label_up;

    int edge_label(const FiniteLattice& L, int x, int y) const;  // x <. y
    std::vector<int> canonical_join_rep(const FiniteLattice& L, int v) const;  // D(v)
    std::vector<int> canonical_meet_rep(const FiniteLattice& L, int v) const;  // U(v)
};

ShardLabeling shard_labeling(const FiniteLattice& L);

// Galois graph: vertices indexed as positions in `lab.jirr`, arrow j -> j'
// iff j != j' and j not<= kappa(j').
std::vector<std::vector<int>> galois_graph(const FiniteLattice& L, const ShardLabeling& lab);

// P_L(q) via the pop-down image; verified against the pop-up image.
IntPoly facet_polynomial(const FiniteLattice& L, const ShardLabeling& lab);

// Lattice congruence: classes are intervals, class maps order-preserving.
struct Congruence {
    std::vector<int> class_of;
    std::vector<int> cmin, cmax;  // per class
    int num_classes = 0;

    int pi_down(int x) const { return cmin[std::size_t(class_of[std::size_t(x)])]; }
    int pi_up(int x) const { return cmax[std::size_t(class_of[std::size_t(x)])]; }
};

Congruence congruence_closure(const FiniteLattice& L,
                              const std::vector<std::pair<int, int>>& pairs);

// Quotient as the induced subposet on pi_down representatives.
struct QuotientLattice {
    FiniteLattice lat;
    std::vector<int> rep;  // quotient element -> representative in L
    std::vector<int> idx;  // L element -> quotient index of its class
};

QuotientLattice quotient_lattice(const FiniteLattice& L, const Congruence& c);

// pop-down inside the quotient evaluated through the congruence formula;
// x must be a pi_down representative.
int quotient_pop(const FiniteLattice& L, const Congruence& c, int x);

// Semidistrim identities pop(pop*(x)) <= x etc.; returns false on violation.
bool check_pop_updown_identities(const FiniteLattice& L);

std::string lattice_dot(const FiniteLattice& L, const std::vector<std::string>& labels,
                        const ShardLabeling* lab = nullptr);

} // namespace cambpop

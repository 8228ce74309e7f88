#pragma once

#include <unordered_map>

#include "cambpop/coxelem.hpp"
#include "cambpop/lattice.hpp"
#include "cambpop/weak.hpp"

namespace cambpop {

// c-sorting word of w: lexicographically first reduced subword of c^infty,
// with the per-copy support blocks I_c^(k)(w).
struct SortingWord {
    std::vector<int> letters;
    std::vector<std::vector<int>> blocks;

    bool nested() const;  // blocks weakly decreasing under containment
};

SortingWord c_sorting_word(const CoxGroup& W, const CoxeterElement& c, const Elt& w);
bool is_c_sortable(const CoxGroup& W, const CoxeterElement& c, const Elt& w);

// Independent route through the parabolic/rotation recurrence.
bool is_c_sortable_recursive(const CoxGroup& W, const CoxeterElement& c, const Elt& w);

// The Cambrian lattice as the induced sublattice of Weak(W) on c-sortable
// elements.  Elements are enumerated without materializing Weak(W) as a
// lattice, so large ambient groups stay cheap.
struct CambrianLattice {
    const CoxGroup* W = nullptr;
    CoxeterElement c;
    FiniteLattice lat;
    std::vector<Elt> elem;
    std::vector<Bitset> inv;
    std::unordered_map<Bitset, int, BitsetHash> id;

    int index_of(const Elt& w) const;    // throws NotSortable when absent
    int maybe_index(const Bitset& b) const;

    // max c-sortable element weakly below w (pi_down^c), with uniqueness of
    // the maximum asserted
    int pi_down(const Elt& w) const;

    // pop via the composition pi_down . pop_weak
    int pop(int x) const;
    Elt pop_elt(const Elt& w) const;
};

CambrianLattice build_cambrian(const CoxGroup& W, const CoxeterElement& c,
                               std::size_t cap = 200000);

// p_i: unique maximal sortable above s_i and above no other simple.
std::vector<int> p_elements(const CambrianLattice& camb);

struct ImageCheck {
    bool brute = false;        // membership in the brute-force image of pop
    bool coxeter = false;      // descents commute and inv(w) misses inv(c^{-1})
    bool lattice = false;      // Boolean interval and no p_i below w
    bool descents_commute = false;
    bool inv_disjoint = false;
    bool boolean_interval = false;
    bool no_p_below = false;
};

ImageCheck image_characterization(const CambrianLattice& camb, int x,
                                  const std::vector<int>& pelems,
                                  const std::vector<bool>& brute_image);

std::vector<bool> brute_force_pop_image(const CambrianLattice& camb);

// The six equivalent conditions of the distributive-interval theorem for a
// sortable w; needs Weak(W) as a lattice.
struct IntervalConditions {
    bool descents_commute = false;
    bool weak_distributive = false;
    bool weak_boolean = false;
    bool camb_distributive = false;
    bool camb_boolean = false;
    bool intervals_equal = false;

    bool all_equal() const {
        return descents_commute == weak_distributive && weak_distributive == weak_boolean &&
               weak_boolean == camb_distributive && camb_distributive == camb_boolean &&
               camb_boolean == intervals_equal;
    }
};

IntervalConditions distributive_interval_conditions(const CambrianLattice& camb,
                                                    const WeakOrder& wk, int x);

// (pop_Weak)^t(pop_Camb(w)) == (pop_Camb)^{t+1}(w)
bool dynamical_identity_check(const CambrianLattice& camb, int x, int t);

// Union of the maximum-length chains, as an induced sublattice.
struct Spine {
    FiniteLattice lat;
    std::vector<int> elems;  // spine index -> Cambrian index
};

Spine spine(const CambrianLattice& camb);

} // namespace cambpop

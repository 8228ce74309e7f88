#include "cambpop/cambrian.hpp"

#include <algorithm>

namespace cambpop {

bool SortingWord::nested() const {
    for (std::size_t k = 0; k + 1 < blocks.size(); ++k)
        if (!std::includes(blocks[k].begin(), blocks[k].end(),
                           blocks[k + 1].begin(), blocks[k + 1].end()))
            return false;
    return true;
}

SortingWord c_sorting_word(const CoxGroup& W, const CoxeterElement& c, const Elt& w) {
    SortingWord sw;
    Elt u = w;
    int len = W.length(u);
    while (len > 0) {
        std::vector<int> block;
        for (int i : c.word) {
            if (W.is_left_descent(u, i)) {
                block.push_back(i);
                sw.letters.push_back(i);
                u = W.mult_left(i, u);
                --len;
            }
        }
        require(!block.empty(), "c_sorting_word: no progress");
        std::sort(block.begin(), block.end());
        sw.blocks.push_back(std::move(block));
    }
    return sw;
}

bool is_c_sortable(const CoxGroup& W, const CoxeterElement& c, const Elt& w) {
    return c_sorting_word(W, c, w).nested();
}

bool is_c_sortable_recursive(const CoxGroup& W, const CoxeterElement& c, const Elt& w) {
    if (W.length(w) == 0) return true;
    int s = c.word[0];
    if (W.is_left_descent(w, s)) {
        // sw is (scs)-sortable; scs rotates the word
        std::vector<int> rotated(c.word.begin() + 1, c.word.end());
        rotated.push_back(s);
        CoxeterElement cc;
        cc.word = rotated;
        return is_c_sortable_recursive(W, cc, W.mult_left(s, w));
    }
    // w must lie in the parabolic without s and be (sc)-sortable there
    for (int i : W.support(w))
        if (i == s) return false;
    CoxeterElement cc;
    cc.word.assign(c.word.begin() + 1, c.word.end());
    return is_c_sortable_recursive(W, cc, w);
}

int CambrianLattice::index_of(const Elt& w) const {
    int i = maybe_index(W->left_inversions(w));
    if (i < 0) throw NotSortable();
    return i;
}

int CambrianLattice::maybe_index(const Bitset& b) const {
    auto it = id.find(b);
    return it == id.end() ? -1 : it->second;
}

int CambrianLattice::pi_down(const Elt& w) const {
    Bitset target = W->left_inversions(w);
    int direct = maybe_index(target);
    if (direct >= 0) return direct;
    int best = -1;
    std::size_t best_len = 0;
    for (int x = 0; x < lat.n; ++x) {
        if (!inv[std::size_t(x)].subset_of(target)) continue;
        std::size_t len = inv[std::size_t(x)].count();
        if (best < 0 || len > best_len) {
            best = x;
            best_len = len;
        }
    }
    require(best >= 0, "pi_down: no sortable below");
    // the maximum must dominate every sortable below w
    for (int x = 0; x < lat.n; ++x)
        if (inv[std::size_t(x)].subset_of(target))
            if (!inv[std::size_t(x)].subset_of(inv[std::size_t(best)])) throw MaxNotUnique();
    return best;
}

int CambrianLattice::pop(int x) const {
    return pi_down(pop_weak(*W, elem[std::size_t(x)]));
}

Elt CambrianLattice::pop_elt(const Elt& w) const {
    int x = maybe_index(W->left_inversions(w));
    if (x < 0) throw NotSortable();
    return elem[std::size_t(pop(x))];
}

CambrianLattice build_cambrian(const CoxGroup& W, const CoxeterElement& c, std::size_t cap) {
    CambrianLattice camb;
    camb.W = &W;
    camb.c = c;
    for (const Elt& w : W.all_elements(cap))
        if (is_c_sortable(W, c, w)) {
            camb.id.emplace(W.left_inversions(w), int(camb.elem.size()));
            camb.inv.push_back(W.left_inversions(w));
            camb.elem.push_back(w);
        }
    const int n = int(camb.elem.size());
    std::vector<Bitset> leq;
    leq.assign(std::size_t(n), Bitset(std::size_t(n)));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (camb.inv[std::size_t(b)].subset_of(camb.inv[std::size_t(a)]))
                leq[std::size_t(a)].set(std::size_t(b));
    camb.lat = FiniteLattice::from_below_sets(std::move(leq), n <= 400);
    return camb;
}

std::vector<int> p_elements(const CambrianLattice& camb) {
    const CoxGroup& W = *camb.W;
    std::vector<int> out;
    for (int i = 0; i < W.rank(); ++i) {
        int ri = W.roots().simple_root[std::size_t(i)];
        std::vector<int> theta;
        for (int x = 0; x < camb.lat.n; ++x) {
            const Bitset& b = camb.inv[std::size_t(x)];
            if (!b.test(std::size_t(ri))) continue;
            bool other = false;
            for (int j = 0; j < W.rank() && !other; ++j)
                if (j != i && b.test(std::size_t(W.roots().simple_root[std::size_t(j)]))) other = true;
            if (!other) theta.push_back(x);
        }
        require(!theta.empty(), "p_elements: Theta_i empty");
        int best = theta[0];
        for (int x : theta)
            if (camb.inv[std::size_t(x)].count() > camb.inv[std::size_t(best)].count()) best = x;
        for (int x : theta)
            if (!camb.inv[std::size_t(x)].subset_of(camb.inv[std::size_t(best)]))
                throw MaxNotUnique("p_i maximum not unique");
        out.push_back(best);
    }
    return out;
}

std::vector<bool> brute_force_pop_image(const CambrianLattice& camb) {
    std::vector<bool> img(std::size_t(camb.lat.n), false);
    for (int x = 0; x < camb.lat.n; ++x) img[std::size_t(camb.pop(x))] = true;
    return img;
}

ImageCheck image_characterization(const CambrianLattice& camb, int x,
                                  const std::vector<int>& pelems,
                                  const std::vector<bool>& brute_image) {
    const CoxGroup& W = *camb.W;
    const Elt& w = camb.elem[std::size_t(x)];
    ImageCheck out;
    out.brute = brute_image[std::size_t(x)];

    std::vector<int> des = W.descents(w);
    out.descents_commute = true;
    for (std::size_t a = 0; a < des.size(); ++a)
        for (std::size_t b = a + 1; b < des.size(); ++b)
            if (W.diagram().bond[std::size_t(des[a])][std::size_t(des[b])] != 2)
                out.descents_commute = false;
    Elt cinv = W.from_word(camb.c.inverse().word);
    out.inv_disjoint = !W.left_inversions(w).intersects(W.left_inversions(cinv));
    out.coxeter = out.descents_commute && out.inv_disjoint;

    out.boolean_interval = is_boolean_interval(camb.lat, camb.pop(x), x);
    out.no_p_below = true;
    for (int p : pelems)
        if (camb.lat.leq(p, x)) out.no_p_below = false;
    out.lattice = out.boolean_interval && out.no_p_below;
    return out;
}

IntervalConditions distributive_interval_conditions(const CambrianLattice& camb,
                                                    const WeakOrder& wk, int x) {
    const CoxGroup& W = *camb.W;
    const Elt& w = camb.elem[std::size_t(x)];
    IntervalConditions out;

    std::vector<int> des = W.descents(w);
    out.descents_commute = true;
    for (std::size_t a = 0; a < des.size(); ++a)
        for (std::size_t b = a + 1; b < des.size(); ++b)
            if (W.diagram().bond[std::size_t(des[a])][std::size_t(des[b])] != 2)
                out.descents_commute = false;

    int wx = wk.index_of(w);
    int wpop = wk.lat.pop_down(wx);
    out.weak_distributive = is_distributive_interval(wk.lat, wpop, wx);
    out.weak_boolean = is_boolean_interval(wk.lat, wpop, wx);

    int cpop = camb.pop(x);
    out.camb_distributive = is_distributive_interval(camb.lat, cpop, x);
    out.camb_boolean = is_boolean_interval(camb.lat, cpop, x);

    // interval equality as element sets inside W
    std::vector<Bitset> weak_set, camb_set;
    {
        Bitset members = wk.lat.below[std::size_t(wx)] & wk.lat.above[std::size_t(wpop)];
        members.for_each([&](std::size_t z) { weak_set.push_back(wk.W->left_inversions(wk.at(int(z)))); });
        Bitset cm = camb.lat.below[std::size_t(x)] & camb.lat.above[std::size_t(cpop)];
        cm.for_each([&](std::size_t z) { camb_set.push_back(camb.inv[z]); });
    }
    auto keyless = [](const Bitset& a, const Bitset& b) { return a.bits() < b.bits(); };
    std::sort(weak_set.begin(), weak_set.end(), keyless);
    std::sort(camb_set.begin(), camb_set.end(), keyless);
    out.intervals_equal = weak_set == camb_set;
    return out;
}

bool dynamical_identity_check(const CambrianLattice& camb, int x, int t) {
    const CoxGroup& W = *camb.W;
    Elt lhs = camb.elem[std::size_t(camb.pop(x))];
    for (int k = 0; k < t; ++k) lhs = pop_weak(W, lhs);
    int rhs = x;
    for (int k = 0; k <= t; ++k) rhs = camb.pop(rhs);
    return W.left_inversions(lhs) == camb.inv[std::size_t(rhs)];
}

Spine spine(const CambrianLattice& camb) {
    const FiniteLattice& L = camb.lat;
    std::vector<int> dn(std::size_t(L.n), 0), up(std::size_t(L.n), 0);
    // longest chains through each element; cover DAG is acyclic
    std::vector<int> order(std::size_t(L.n), 0);
    {
        std::vector<std::pair<std::size_t, int>> by_size;
        for (int x = 0; x < L.n; ++x) by_size.emplace_back(L.below[std::size_t(x)].count(), x);
        std::sort(by_size.begin(), by_size.end());
        for (std::size_t k = 0; k < by_size.size(); ++k) order[k] = by_size[k].second;
    }
    for (int x : order)
        for (int c : L.down[std::size_t(x)]) dn[std::size_t(x)] = std::max(dn[std::size_t(x)], dn[std::size_t(c)] + 1);
    for (auto it = order.rbegin(); it != order.rend(); ++it)
        for (int c : L.up[std::size_t(*it)]) up[std::size_t(*it)] = std::max(up[std::size_t(*it)], up[std::size_t(c)] + 1);
    int maxlen = dn[std::size_t(L.top)];
    Spine sp;
    std::vector<int> local(std::size_t(L.n), -1);
    for (int x = 0; x < L.n; ++x)
        if (dn[std::size_t(x)] + up[std::size_t(x)] == maxlen) {
            local[std::size_t(x)] = int(sp.elems.size());
            sp.elems.push_back(x);
        }
    // induced subposet; the spine is a sublattice, so this is a lattice
    const int m = int(sp.elems.size());
    std::vector<Bitset> leq;
    leq.assign(std::size_t(m), Bitset(std::size_t(m)));
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b)
            if (L.leq(sp.elems[std::size_t(b)], sp.elems[std::size_t(a)]))
                leq[std::size_t(a)].set(std::size_t(b));
    sp.lat = FiniteLattice::from_below_sets(std::move(leq));
    return sp;
}

} // namespace cambpop

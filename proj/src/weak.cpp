#include "cambpop/weak.hpp"

#include <algorithm>

namespace cambpop {

int WeakOrder::index_of(const Elt& w) const {
    auto it = id.find(W->left_inversions(w));
    require(it != id.end(), "WeakOrder: element not present");
    return it->second;
}

WeakOrder build_weak_lattice(const CoxGroup& W, std::size_t cap) {
    WeakOrder wk;
    wk.W = &W;
    wk.elem.push_back(W.identity());
    wk.id.emplace(W.left_inversions(wk.elem[0]), 0);
    std::vector<std::pair<int, int>> covers;
    for (std::size_t head = 0; head < wk.elem.size(); ++head) {
        Elt w = wk.elem[head];
        for (int i = 0; i < W.rank(); ++i) {
            if (W.is_right_descent(w, i)) continue;
            Elt nxt = W.mult_right(w, i);
            Bitset key = W.left_inversions(nxt);
            auto it = wk.id.find(key);
            int idx;
            if (it == wk.id.end()) {
                if (wk.elem.size() >= cap) throw GroupTooLarge();
                idx = int(wk.elem.size());
                wk.id.emplace(std::move(key), idx);
                wk.elem.push_back(std::move(nxt));
            } else {
                idx = it->second;
            }
            covers.emplace_back(int(head), idx);
        }
    }
    wk.lat = FiniteLattice::from_covers(int(wk.elem.size()), covers, wk.elem.size() <= 400);
    return wk;
}

Elt pop_weak(const CoxGroup& W, const Elt& w) {
    return W.mult(w, W.longest(W.descents(w)));
}

std::vector<int> cover_reflections(const CoxGroup& W, const Elt& w) {
    // for s in Des(w): t = w s w^{-1} has root |w(alpha_s)|
    std::vector<int> out;
    for (int s : W.descents(w)) {
        int img = w.act[std::size_t(W.roots().simple_root[std::size_t(s)])];
        out.push_back((img > 0 ? img : -img) - 1);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<int> cjr_weak(const WeakOrder& wk, int w_index) {
    const CoxGroup& W = *wk.W;
    const Elt& w = wk.at(w_index);
    Bitset invw = W.left_inversions(w);
    std::vector<int> out;
    for (int t : cover_reflections(W, w)) {
        // minimal x <= w with beta_t in inv(x); minimality as unique minimum
        int best = -1;
        std::size_t best_len = 0;
        for (int x = 0; x < wk.lat.n; ++x) {
            Bitset ix = W.left_inversions(wk.at(x));
            if (!ix.test(std::size_t(t)) || !ix.subset_of(invw)) continue;
            if (best < 0 || ix.count() < best_len) {
                best = x;
                best_len = ix.count();
            }
        }
        require(best >= 0, "cjr_weak: no witness");
        // the witness must be below every other candidate
        Bitset bb = W.left_inversions(wk.at(best));
        for (int x = 0; x < wk.lat.n; ++x) {
            Bitset ix = W.left_inversions(wk.at(x));
            if (ix.test(std::size_t(t)) && ix.subset_of(invw))
                require(bb.subset_of(ix), "cjr_weak: minimal witness not unique");
        }
        out.push_back(best);
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace cambpop

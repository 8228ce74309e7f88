#include "cambpop/heap.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace cambpop {

Heap heap_of_word(const CoxeterDiagram& dia, const std::vector<int>& word) {
    Heap h;
    h.dia = dia;
    h.letter = word;
    std::vector<int> counts(std::size_t(dia.rank), 0);
    for (int s : word) h.occ.push_back(++counts[std::size_t(s)]);
    const std::size_t n = word.size();
    h.below.assign(n, Bitset(n));
    for (std::size_t b = 0; b < n; ++b)
        for (std::size_t a = 0; a < b; ++a)
            if (dia.bond[std::size_t(word[a])][std::size_t(word[b])] != 2) {
                h.below[b].set(a);
                h.below[b] |= h.below[a];
            }
    return h;
}

std::vector<std::pair<int, int>> Heap::covers() const {
    std::vector<std::pair<int, int>> out;
    for (std::size_t b = 0; b < size(); ++b) {
        Bitset strict = below[b];
        // a is a cover of b iff a < b and no c with a < c < b
        strict.for_each([&](std::size_t a) {
            Bitset mid = below[b];
            bool has_mid = false;
            mid.for_each([&](std::size_t c) {
                if (below[c].test(a)) has_mid = true;
            });
            if (!has_mid) out.emplace_back(int(a), int(b));
        });
    }
    return out;
}

bool Heap::is_order_ideal(const Bitset& sub) const {
    for (std::size_t b = 0; b < size(); ++b)
        if (sub.test(b) && !below[b].subset_of(sub)) return false;
    return true;
}

namespace {

// Cartier-Foata normal form: repeatedly strip the minimal letters.  A
// letter is minimal iff every earlier remaining letter commutes with it.
std::vector<std::vector<int>> cf_normal_form(const CoxeterDiagram& dia,
                                             std::vector<int> word) {
    std::vector<std::vector<int>> blocks;
    while (!word.empty()) {
        std::vector<int> block, rest;
        std::vector<bool> blocked(std::size_t(dia.rank), false);
        for (int s : word) {
            if (!blocked[std::size_t(s)]) block.push_back(s);
            else rest.push_back(s);
            for (int t = 0; t < dia.rank; ++t)
                if (dia.bond[std::size_t(s)][std::size_t(t)] != 2) blocked[std::size_t(t)] = true;
        }
        std::sort(block.begin(), block.end());
        blocks.push_back(std::move(block));
        word = std::move(rest);
    }
    return blocks;
}

} // namespace

bool commutation_equivalent(const CoxeterDiagram& dia, const std::vector<int>& w1,
                            const std::vector<int>& w2) {
    if (w1.size() != w2.size()) return false;
    return cf_normal_form(dia, w1) == cf_normal_form(dia, w2);
}

std::vector<int> heap_base_rank(const CoxeterDiagram& dia, const CoxeterElement& c) {
    std::vector<int> pos(std::size_t(dia.rank));
    for (std::size_t k = 0; k < c.word.size(); ++k) pos[std::size_t(c.word[k])] = int(k);
    std::vector<int> rank(std::size_t(dia.rank), 0);
    std::vector<bool> set(std::size_t(dia.rank), false);
    std::vector<int> stack{0};
    set[0] = true;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int u = 0; u < dia.rank; ++u) {
            if (dia.bond[std::size_t(v)][std::size_t(u)] < 3 || set[std::size_t(u)]) continue;
            rank[std::size_t(u)] =
                rank[std::size_t(v)] + (pos[std::size_t(v)] < pos[std::size_t(u)] ? 1 : -1);
            set[std::size_t(u)] = true;
            stack.push_back(u);
        }
    }
    int mn = rank[0];
    for (int r : rank) mn = std::min(mn, r);
    for (int& r : rank) r += 1 - mn;
    return rank;
}

Elt CambrianHeap::zeta(const Bitset& subset) const {
    require(heap.is_order_ideal(subset), "zeta: subset must be an order ideal");
    Elt w = W->identity();
    for (std::size_t k = 0; k < heap.size(); ++k)
        if (subset.test(k)) w = W->mult_right(w, heap.letter[k]);
    return w;
}

Bitset CambrianHeap::rank_ideal(int k) const {
    Bitset b(heap.size());
    for (std::size_t p = 0; p < heap.size(); ++p)
        if (rank[p] <= k) b.set(p);
    return b;
}

std::vector<int> CambrianHeap::column(int k) const {
    std::vector<int> out;
    for (std::size_t p = 0; p < heap.size(); ++p)
        if (rank[p] == k) out.push_back(heap.letter[p]);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Elt> CambrianHeap::orbit_elements() const {
    std::vector<Elt> v;
    for (int j = h - 1; j >= 0; --j) v.push_back(zeta(rank_ideal(j)));
    return v;
}

CambrianHeap build_cambrian_heap(const CoxGroup& W, const CoxeterElement& c) {
    CambrianHeap hc;
    hc.W = &W;
    hc.c = c;
    hc.h = W.coxeter_number();
    hc.sort_word = c_sorting_word(W, c, W.longest()).letters;
    hc.heap = heap_of_word(W.diagram(), hc.sort_word);
    hc.base_rank = heap_base_rank(W.diagram(), c);
    for (std::size_t p = 0; p < hc.heap.size(); ++p)
        hc.rank.push_back(hc.base_rank[std::size_t(hc.heap.letter[p])] + 2 * (hc.heap.occ[p] - 1));
    return hc;
}

std::pair<std::vector<int>, std::vector<int>> bipartition(const CoxeterDiagram& dia,
                                                          const CoxeterElement& c) {
    std::vector<int> rank = heap_base_rank(dia, c);
    std::pair<std::vector<int>, std::vector<int>> parts;
    for (int i = 0; i < dia.rank; ++i)
        (rank[std::size_t(i)] % 2 == 1 ? parts.first : parts.second).push_back(i);
    return parts;
}

std::vector<int> u_word(const std::pair<std::vector<int>, std::vector<int>>& parts, int k) {
    std::vector<int> out;
    for (int b = 1; b <= k; ++b) {
        const std::vector<int>& part = (b % 2 == 1) ? parts.first : parts.second;
        out.insert(out.end(), part.begin(), part.end());
    }
    return out;
}

bool verify_column_lemma(const CambrianHeap& hc) {
    auto parts = bipartition(hc.W->diagram(), hc.c);
    const std::vector<int>& expect = ((hc.h - 1) % 2 == 1) ? parts.first : parts.second;
    return hc.column(hc.h - 1) == expect;
}

bool verify_descent_lemma(const CambrianHeap& hc) {
    for (int k = 1; k <= hc.h - 1; ++k) {
        std::vector<int> des = hc.W->descents(hc.zeta(hc.rank_ideal(k)));
        if (des != hc.column(k)) return false;
    }
    return true;
}

std::vector<int> z_c_orbit(const CambrianLattice& camb, const CambrianHeap& hc) {
    return camb.lat.pop_orbit(camb.index_of(hc.z_c()));
}

std::vector<Bitset> heap_order_ideals(const Heap& h, std::size_t cap) {
    std::vector<Bitset> out;
    std::vector<Bitset> frontier{Bitset(h.size())};
    std::map<std::vector<int>, bool> seen;
    seen[frontier[0].bits()] = true;
    while (!frontier.empty()) {
        Bitset cur = frontier.back();
        frontier.pop_back();
        out.push_back(cur);
        require(out.size() <= cap, "heap_order_ideals: cap exceeded");
        for (std::size_t p = 0; p < h.size(); ++p) {
            if (cur.test(p) || !h.below[p].subset_of(cur)) continue;
            Bitset nxt = cur;
            nxt.set(p);
            auto key = nxt.bits();
            if (!seen.count(key)) {
                seen[key] = true;
                frontier.push_back(nxt);
            }
        }
    }
    return out;
}

std::vector<int> heap_root_bijection(const CambrianHeap& hc) {
    const CoxGroup& W = *hc.W;
    const std::vector<int>& word = hc.sort_word;
    std::vector<int> root(word.size(), -1);
    Elt g = W.identity();
    for (std::size_t k = word.size(); k-- > 0;) {
        int r = W.roots().simple_root[std::size_t(word[k])];
        int img = g.act[std::size_t(r)];
        require(img > 0, "heap_root_bijection: suffix image must stay positive");
        root[k] = img - 1;
        g = W.mult_right(g, word[k]);
    }
    return root;
}

std::string ar_quiver_dot(const CambrianHeap& hc) {
    const CoxGroup& W = *hc.W;
    std::vector<int> root = heap_root_bijection(hc);
    // projective roots rho_i, per the Coxeter element
    Bitset proj(std::size_t(W.num_roots()));
    {
        Elt g = W.identity();
        for (std::size_t k = hc.c.word.size(); k-- > 0;) {
            int r = W.roots().simple_root[std::size_t(hc.c.word[k])];
            int img = g.act[std::size_t(r)];
            proj.set(std::size_t((img > 0 ? img : -img) - 1));
            g = W.mult_right(g, hc.c.word[k]);
        }
    }
    std::ostringstream os;
    os << "digraph heap {\n  rankdir=LR;\n  node [shape=box];\n";
    for (std::size_t p = 0; p < hc.heap.size(); ++p) {
        os << "  v" << p << " [label=\"" << W.diagram().simple_label(hc.heap.letter[p]) << "("
           << hc.heap.occ[p] << ") dim=" << W.roots().root_repr(root[p]);
        if (proj.test(std::size_t(root[p]))) os << " P";
        os << "\"];\n";
    }
    int maxrank = 0;
    for (int r : hc.rank) maxrank = std::max(maxrank, r);
    for (int r = 1; r <= maxrank; ++r) {
        os << "  { rank=same;";
        for (std::size_t p = 0; p < hc.heap.size(); ++p)
            if (hc.rank[p] == r) os << " v" << p << ";";
        os << " }\n";
    }
    for (auto [a, b] : hc.heap.covers()) os << "  v" << a << " -> v" << b << ";\n";
    os << "}\n";
    return os.str();
}

} // namespace cambpop

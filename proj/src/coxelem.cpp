#include "cambpop/coxelem.hpp"

#include <algorithm>
#include <set>

namespace cambpop {

std::vector<bool> CoxeterElement::orientation(const CoxeterDiagram& dia) const {
    std::vector<int> pos(std::size_t(dia.rank), -1);
    for (std::size_t k = 0; k < word.size(); ++k) pos[std::size_t(word[k])] = int(k);
    auto edges = dia.edges();
    std::vector<bool> orient(edges.size());
    for (std::size_t k = 0; k < edges.size(); ++k)
        orient[k] = pos[std::size_t(edges[k].first)] < pos[std::size_t(edges[k].second)];
    return orient;
}

CoxeterElement CoxeterElement::inverse() const {
    CoxeterElement inv;
    inv.word.assign(word.rbegin(), word.rend());
    return inv;
}

namespace {

// smallest-index topological sort of the orientation
std::vector<int> canonical_word(const CoxeterDiagram& dia, const std::vector<bool>& orient) {
    auto edges = dia.edges();
    std::vector<std::vector<int>> succ(std::size_t(dia.rank));
    std::vector<int> indeg(std::size_t(dia.rank), 0);
    for (std::size_t k = 0; k < edges.size(); ++k) {
        int from = orient[k] ? edges[k].first : edges[k].second;
        int to = orient[k] ? edges[k].second : edges[k].first;
        succ[std::size_t(from)].push_back(to);
        ++indeg[std::size_t(to)];
    }
    std::set<int> ready;
    for (int v = 0; v < dia.rank; ++v)
        if (indeg[std::size_t(v)] == 0) ready.insert(v);
    std::vector<int> out;
    while (!ready.empty()) {
        int v = *ready.begin();
        ready.erase(ready.begin());
        out.push_back(v);
        for (int u : succ[std::size_t(v)])
            if (--indeg[std::size_t(u)] == 0) ready.insert(u);
    }
    require(int(out.size()) == dia.rank, "coxeter element orientation has a cycle");
    return out;
}

} // namespace

CoxeterElement make_coxeter_element(const CoxeterDiagram& dia, const std::vector<int>& word) {
    require(int(word.size()) == dia.rank, "coxeter word must use every simple once");
    std::vector<bool> seen(std::size_t(dia.rank), false);
    for (int i : word) {
        require(i >= 0 && i < dia.rank && !seen[std::size_t(i)], "coxeter word must use every simple once");
        seen[std::size_t(i)] = true;
    }
    CoxeterElement c;
    c.word = word;
    c.word = canonical_word(dia, c.orientation(dia));
    return c;
}

std::vector<CoxeterElement> all_coxeter_elements(const CoxeterDiagram& dia) {
    auto edges = dia.edges();
    std::vector<CoxeterElement> out;
    std::set<std::vector<int>> seen;
    for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << edges.size()); ++mask) {
        std::vector<bool> orient(edges.size());
        for (std::size_t k = 0; k < edges.size(); ++k) orient[k] = (mask >> k) & 1;
        CoxeterElement c;
        c.word = canonical_word(dia, orient);
        if (seen.insert(c.word).second) out.push_back(c);
    }
    return out;
}

CoxeterElement bipartite_coxeter_element(const CoxeterDiagram& dia) {
    // 2-color the tree; the class of internal vertex 0 goes first
    std::vector<int> color(std::size_t(dia.rank), -1);
    std::vector<int> stack{0};
    color[0] = 0;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int u = 0; u < dia.rank; ++u)
            if (dia.bond[std::size_t(v)][std::size_t(u)] >= 3) {
                if (color[std::size_t(u)] < 0) {
                    color[std::size_t(u)] = 1 - color[std::size_t(v)];
                    stack.push_back(u);
                } else {
                    require(color[std::size_t(u)] != color[std::size_t(v)],
                            "Coxeter graph is not bipartite");
                }
            }
    }
    std::vector<int> word;
    for (int v = 0; v < dia.rank; ++v)
        if (color[std::size_t(v)] == 0) word.push_back(v);
    for (int v = 0; v < dia.rank; ++v)
        if (color[std::size_t(v)] == 1) word.push_back(v);
    return make_coxeter_element(dia, word);
}

CoxeterElement linear_coxeter_element(const CoxeterDiagram& dia) {
    std::vector<int> word(std::size_t(dia.rank));
    for (int i = 0; i < dia.rank; ++i) word[std::size_t(i)] = i;
    return make_coxeter_element(dia, word);
}

} // namespace cambpop

#include "cambpop/arcs.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

#include "cambpop/errors.hpp"
#include "cambpop/motzkin.hpp"

namespace cambpop {

bool Arc::passes_above(int k) const {
    return std::binary_search(above.begin(), above.end(), k);
}

namespace {
// -1 below, 0 on the point, +1 above; only valid for left <= k <= right
int level_at(const Arc& a, int k) {
    if (k == a.left || k == a.right) return 0;
    return a.passes_above(k) ? 1 : -1;
}
} // namespace

bool arcs_cross(const Arc& a, const Arc& b) {
    int lo = std::max(a.left, b.left);
    int hi = std::min(a.right, b.right);
    bool seen_pos = false, seen_neg = false;
    for (int k = lo; k <= hi; ++k) {
        int d = level_at(a, k) - level_at(b, k);
        if (d > 0) seen_pos = true;
        if (d < 0) seen_neg = true;
    }
    return seen_pos && seen_neg;
}

bool arcs_compatible(const Arc& a, const Arc& b) {
    if (a.left == b.left || a.right == b.right) return false;
    return !arcs_cross(a, b);
}

bool is_noncrossing_diagram(const ArcDiagram& d) {
    for (std::size_t i = 0; i < d.size(); ++i)
        for (std::size_t j = i + 1; j < d.size(); ++j)
            if (!arcs_compatible(d[i], d[j])) return false;
    return true;
}

NuMap nu_of_coxeter(const CoxeterDiagram& dia, const CoxeterElement& c) {
    require(dia.type == CoxType::A, "nu_of_coxeter: type A only");
    NuMap nu;
    nu.n = dia.rank;
    std::vector<int> pos(std::size_t(dia.rank));
    for (std::size_t k = 0; k < c.word.size(); ++k) pos[std::size_t(c.word[k])] = int(k);
    for (int i = 2; i <= nu.n; ++i)
        // A iff s_i precedes s_{i-1}; display s_i is internal i-1
        nu.is_a.push_back(pos[std::size_t(i - 1)] < pos[std::size_t(i - 2)]);
    return nu;
}

NuMap bipartite_nu(int n) {
    NuMap nu;
    nu.n = n;
    for (int i = 2; i <= n; ++i) nu.is_a.push_back(i % 2 == 1);
    return nu;
}

CoxeterElement coxeter_of_nu(const CoxeterDiagram& dia, const NuMap& nu) {
    require(dia.type == CoxType::A && dia.rank == nu.n, "coxeter_of_nu: shape mismatch");
    // topological order of the orientation where nu(i)=A orients s_i -> s_{i-1}
    std::vector<bool> orient;  // edges (i-1, i) internal = (s_i, s_{i+1})
    auto edges = dia.edges();
    for (auto [u, v] : edges) {
        // edge between display s_{u+1}, s_{v+1} with v = u+1; nu index v+1
        bool a = nu.a_at(v + 1);
        // A: s_{v+1} precedes s_{u+1}: orientation v -> u
        orient.push_back(!a);
    }
    std::vector<int> word;
    // build any linear order consistent with the orientation via repeated
    // source removal on the path graph
    std::vector<int> indeg(std::size_t(dia.rank), 0);
    std::vector<std::vector<int>> succ(std::size_t(dia.rank));
    for (std::size_t k = 0; k < edges.size(); ++k) {
        int from = orient[k] ? edges[k].first : edges[k].second;
        int to = orient[k] ? edges[k].second : edges[k].first;
        succ[std::size_t(from)].push_back(to);
        ++indeg[std::size_t(to)];
    }
    std::vector<int> ready;
    for (int v = 0; v < dia.rank; ++v)
        if (indeg[std::size_t(v)] == 0) ready.push_back(v);
    while (!ready.empty()) {
        std::sort(ready.begin(), ready.end());
        int v = ready.front();
        ready.erase(ready.begin());
        word.push_back(v);
        for (int u : succ[std::size_t(v)])
            if (--indeg[std::size_t(u)] == 0) ready.push_back(u);
    }
    return make_coxeter_element(dia, word);
}

bool arc_sortable(const NuMap& nu, const Arc& a) {
    for (int k = a.left + 1; k < a.right; ++k)
        if (a.passes_above(k) != nu.a_at(k)) return false;
    return true;
}

Arc sortable_arc(const NuMap& nu, int i, int j) {
    Arc a;
    a.left = i;
    a.right = j;
    for (int k = i + 1; k < j; ++k)
        if (nu.a_at(k)) a.above.push_back(k);
    return a;
}

ArcDiagram delta_map(const std::vector<int>& line) {
    const int n = int(line.size()) - 1;
    std::vector<int> pos(line.size() + 1);
    for (std::size_t k = 0; k < line.size(); ++k) pos[std::size_t(line[k])] = int(k) + 1;
    ArcDiagram d;
    for (int i = 1; i <= n; ++i) {
        if (line[std::size_t(i) - 1] <= line[std::size_t(i)]) continue;
        Arc a;
        a.left = line[std::size_t(i)];
        a.right = line[std::size_t(i) - 1];
        for (int k = a.left + 1; k < a.right; ++k) {
            require(pos[std::size_t(k)] != i && pos[std::size_t(k)] != i + 1, "delta_map: bad line");
            if (pos[std::size_t(k)] > i + 1) a.above.push_back(k);
        }
        d.push_back(a);
    }
    std::sort(d.begin(), d.end());
    return d;
}

namespace {
void all_cliques(const std::vector<std::vector<bool>>& comp, std::size_t start,
                 std::vector<int>& chosen, std::vector<std::vector<int>>& out) {
    out.push_back(chosen);
    for (std::size_t v = start; v < comp.size(); ++v) {
        bool ok = true;
        for (int c : chosen)
            if (!comp[v][std::size_t(c)]) { ok = false; break; }
        if (!ok) continue;
        chosen.push_back(int(v));
        all_cliques(comp, v + 1, chosen, out);
        chosen.pop_back();
    }
}
} // namespace

std::vector<ArcDiagram> maximal_diagrams(const NuMap& nu) {
    // The complex of sortable noncrossing diagrams is flag, so its faces are
    // the cliques of the pairwise-compatibility graph on sortable arcs.
    std::vector<Arc> arcs;
    for (int i = 1; i <= nu.n + 1; ++i)
        for (int j = i + 1; j <= nu.n + 1; ++j) arcs.push_back(sortable_arc(nu, i, j));
    std::vector<std::vector<bool>> comp(arcs.size(), std::vector<bool>(arcs.size(), false));
    for (std::size_t a = 0; a < arcs.size(); ++a)
        for (std::size_t b = a + 1; b < arcs.size(); ++b)
            comp[a][b] = comp[b][a] = arcs_compatible(arcs[a], arcs[b]);
    std::vector<std::vector<int>> cliques;
    std::vector<int> chosen;
    all_cliques(comp, 0, chosen, cliques);
    std::vector<ArcDiagram> out;
    for (const auto& cl : cliques) {
        bool maximal = true;
        for (std::size_t v = 0; v < arcs.size() && maximal; ++v) {
            bool compat_all = true;
            for (int c : cl)
                if (std::size_t(c) == v || !comp[v][std::size_t(c)]) { compat_all = false; break; }
            if (compat_all) maximal = false;
        }
        if (!maximal) continue;
        ArcDiagram d;
        for (int c : cl) d.push_back(arcs[std::size_t(c)]);
        std::sort(d.begin(), d.end());
        out.push_back(std::move(d));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::string psi_map(int n, const ArcDiagram& d) {
    std::vector<bool> is_left(std::size_t(n) + 2, false), is_right(std::size_t(n) + 2, false);
    for (const Arc& a : d) {
        is_left[std::size_t(a.left)] = true;
        is_right[std::size_t(a.right)] = true;
    }
    std::string path;
    for (int i = 1; i <= n + 1; ++i) {
        bool u = i <= n && !is_right[std::size_t(i) + 1];
        bool dn = i >= 2 && !is_left[std::size_t(i) - 1];
        if (u && dn) throw NotMaximal("psi: letter would be both U and D");
        path.push_back(u ? 'U' : dn ? 'D' : 'H');
    }
    return path;
}

ArcDiagram psi_inverse(int n, const std::string& path) {
    require(int(path.size()) == n + 1, "psi_inverse: path must have length n+1");
    if (!is_motzkin(path) || has_height1_peak(path)) throw InvalidPath("psi_inverse: path not in Mbar");
    // open partial arcs bottom-to-top; each entry is its start point
    std::deque<int> open;
    ArcDiagram out;
    for (int k = 1; k <= n + 1; ++k) {
        bool odd = k % 2 == 1;
        if (k >= 2 && path[std::size_t(k) - 2] != 'U') {
            // attach: the lowest open arc if others pass above (odd k), else
            // the highest
            if (open.empty()) throw InvalidPath("psi_inverse: no partial arc to close");
            int start;
            if (odd) { start = open.front(); open.pop_front(); }
            else { start = open.back(); open.pop_back(); }
            Arc a;
            a.left = start;
            a.right = k;
            for (int p = start + 1; p < k; ++p)
                if (p % 2 == 1) a.above.push_back(p);
            out.push_back(a);
        }
        if (k <= n && path[std::size_t(k)] != 'D') {
            if (odd) open.push_front(k);
            else open.push_back(k);
        }
    }
    if (!open.empty()) throw InvalidPath("psi_inverse: unclosed partial arcs");
    std::sort(out.begin(), out.end());
    return out;
}

bool choi_sun_check(int n, const std::vector<int>& line) {
    require(n >= 2 && int(line.size()) == n + 1, "choi_sun_check: n >= 2");
    std::vector<int> pos(line.size() + 1);
    for (std::size_t k = 0; k < line.size(); ++k) pos[std::size_t(line[k])] = int(k) + 1;
    for (int i = 1; i + 2 <= n + 1; ++i)
        if (line[std::size_t(i) - 1] > line[std::size_t(i)] &&
            line[std::size_t(i)] > line[std::size_t(i) + 1])
            return false;  // double descent
    for (int k = 1; 2 * k + 1 <= n + 1; ++k)
        if (pos[std::size_t(2 * k)] > pos[std::size_t(2 * k + 1)]) return false;
    for (int k = 1; 2 * k + 3 <= n + 1; ++k)
        if (pos[std::size_t(2 * k)] > pos[std::size_t(2 * k + 3)]) return false;
    if (n % 2 == 1 && n >= 3 && pos[std::size_t(n) - 1] > pos[std::size_t(n) + 1]) return false;
    if (pos[1] > pos[3]) return false;
    return true;
}

std::string diagram_str(const ArcDiagram& d) {
    std::ostringstream os;
    os << "{";
    for (std::size_t k = 0; k < d.size(); ++k) {
        if (k) os << ", ";
        os << d[k].left << "->" << d[k].right;
        if (!d[k].above.empty()) {
            os << " above";
            for (int p : d[k].above) os << " " << p;
        }
    }
    os << "}";
    return os.str();
}

} // namespace cambpop

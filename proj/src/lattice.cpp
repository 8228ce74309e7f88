#include "cambpop/lattice.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <sstream>

namespace cambpop {

void FiniteLattice::finalize(bool validate) {
    // topological sweep for below/above
    std::vector<int> indet(std::size_t(n), 0);
    for (int x = 0; x < n; ++x) indet[std::size_t(x)] = int(down[std::size_t(x)].size());
    std::queue<int> q;
    below.assign(std::size_t(n), Bitset(std::size_t(n)));
    for (int x = 0; x < n; ++x)
        if (indet[std::size_t(x)] == 0) q.push(x);
    int processed = 0;
    std::vector<int> topo;
    while (!q.empty()) {
        int x = q.front();
        q.pop();
        topo.push_back(x);
        ++processed;
        below[std::size_t(x)].set(std::size_t(x));
        for (int c : down[std::size_t(x)]) below[std::size_t(x)] |= below[std::size_t(c)];
        for (int y : up[std::size_t(x)])
            if (--indet[std::size_t(y)] == 0) q.push(y);
    }
    require(processed == n, "lattice: cover relation has a cycle");
    above.assign(std::size_t(n), Bitset(std::size_t(n)));
    for (auto it = topo.rbegin(); it != topo.rend(); ++it) {
        int x = *it;
        above[std::size_t(x)].set(std::size_t(x));
        for (int y : up[std::size_t(x)]) above[std::size_t(x)] |= above[std::size_t(y)];
    }
    bottom = top = -1;
    for (int x = 0; x < n; ++x) {
        if (down[std::size_t(x)].empty()) {
            require(bottom < 0, "lattice: minimum not unique");
            bottom = x;
        }
        if (up[std::size_t(x)].empty()) {
            require(top < 0, "lattice: maximum not unique");
            top = x;
        }
    }
    require(bottom >= 0 && top >= 0, "lattice: missing extremes");
    if (validate && n <= 600) {
        for (int x = 0; x < n; ++x)
            for (int y = x + 1; y < n; ++y) {
                meet_raw(x, y);
                join_raw(x, y);
            }
    }
}

FiniteLattice FiniteLattice::from_covers(int n, const std::vector<std::pair<int, int>>& covers,
                                         bool validate) {
    FiniteLattice L;
    L.n = n;
    L.up.assign(std::size_t(n), {});
    L.down.assign(std::size_t(n), {});
    for (auto [lo, hi] : covers) {
        L.up[std::size_t(lo)].push_back(hi);
        L.down[std::size_t(hi)].push_back(lo);
    }
    L.finalize(validate);
    return L;
}

FiniteLattice FiniteLattice::from_below_sets(std::vector<Bitset> leq_below, bool validate) {
    const int n = int(leq_below.size());
    for (int x = 0; x < n; ++x) leq_below[std::size_t(x)].set(std::size_t(x));
    // covers of x = maximal elements of below[x] - {x}; iterate by
    // decreasing downset size, marking dominated elements.
    std::vector<int> order(std::size_t(n), 0);
    std::iota(order.begin(), order.end(), 0);
    std::vector<std::size_t> sz(std::size_t(n), 0);
    for (int x = 0; x < n; ++x) sz[std::size_t(x)] = leq_below[std::size_t(x)].count();
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return sz[std::size_t(a)] > sz[std::size_t(b)]; });
    FiniteLattice L;
    L.n = n;
    L.up.assign(std::size_t(n), {});
    L.down.assign(std::size_t(n), {});
    for (int x = 0; x < n; ++x) {
        Bitset strict = leq_below[std::size_t(x)];
        strict.reset(std::size_t(x));
        Bitset marked{std::size_t(n)};
        for (int z : order) {
            if (!strict.test(std::size_t(z)) || marked.test(std::size_t(z))) continue;
            L.down[std::size_t(x)].push_back(z);
            L.up[std::size_t(z)].push_back(x);
            marked |= leq_below[std::size_t(z)];
        }
    }
    L.finalize(validate);
    for (int x = 0; x < n; ++x)
        require(L.below[std::size_t(x)] == leq_below[std::size_t(x)],
                "from_below_sets: input was not a partial order");
    return L;
}

int FiniteLattice::meet_raw(int x, int y) const {
    Bitset m = below[std::size_t(x)] & below[std::size_t(y)];
    int best = -1;
    std::size_t bestc = 0;
    m.for_each([&](std::size_t z) {
        std::size_t c = below[z].count();
        if (best < 0 || c > bestc) {
            best = int(z);
            bestc = c;
        }
    });
    if (best < 0 || !(below[std::size_t(best)] == m)) throw NotALattice();
    return best;
}

int FiniteLattice::join_raw(int x, int y) const {
    Bitset m = above[std::size_t(x)] & above[std::size_t(y)];
    int best = -1;
    std::size_t bestc = 0;
    m.for_each([&](std::size_t z) {
        std::size_t c = above[z].count();
        if (best < 0 || c > bestc) {
            best = int(z);
            bestc = c;
        }
    });
    if (best < 0 || !(above[std::size_t(best)] == m)) throw NotALattice();
    return best;
}

void FiniteLattice::build_op_tables() const {
    if (!meet_tab_.empty()) return;
    meet_tab_.assign(std::size_t(n) * std::size_t(n), -1);
    join_tab_.assign(std::size_t(n) * std::size_t(n), -1);
    for (int x = 0; x < n; ++x)
        for (int y = x; y < n; ++y) {
            int m = meet_raw(x, y), j = join_raw(x, y);
            meet_tab_[std::size_t(x) * std::size_t(n) + std::size_t(y)] = m;
            meet_tab_[std::size_t(y) * std::size_t(n) + std::size_t(x)] = m;
            join_tab_[std::size_t(x) * std::size_t(n) + std::size_t(y)] = j;
            join_tab_[std::size_t(y) * std::size_t(n) + std::size_t(x)] = j;
        }
}

int FiniteLattice::meet(int x, int y) const {
    if (!meet_tab_.empty()) return meet_tab_[std::size_t(x) * std::size_t(n) + std::size_t(y)];
    return meet_raw(x, y);
}

int FiniteLattice::join(int x, int y) const {
    if (!join_tab_.empty()) return join_tab_[std::size_t(x) * std::size_t(n) + std::size_t(y)];
    return join_raw(x, y);
}

int FiniteLattice::meet_of(const std::vector<int>& xs) const {
    int acc = top;
    for (int x : xs) acc = meet(acc, x);
    return acc;
}

int FiniteLattice::join_of(const std::vector<int>& xs) const {
    int acc = bottom;
    for (int x : xs) acc = join(acc, x);
    return acc;
}

int FiniteLattice::pop_down(int x) const {
    int acc = x;
    for (int c : down[std::size_t(x)]) acc = meet(acc, c);
    return acc;
}

int FiniteLattice::pop_up(int x) const {
    int acc = x;
    for (int c : up[std::size_t(x)]) acc = join(acc, c);
    return acc;
}

std::vector<int> FiniteLattice::pop_orbit(int x) const {
    std::vector<int> orb{x};
    while (orb.back() != bottom) orb.push_back(pop_down(orb.back()));
    return orb;
}

std::vector<int> FiniteLattice::pop_up_orbit(int x) const {
    std::vector<int> orb{x};
    while (orb.back() != top) orb.push_back(pop_up(orb.back()));
    return orb;
}

FiniteLattice::OrbitStats FiniteLattice::orbit_stats() const {
    OrbitStats st;
    for (int x = 0; x < n; ++x) {
        int sz = int(pop_orbit(x).size());
        if (sz > st.max_size) {
            st.max_size = sz;
            st.argmax.clear();
        }
        if (sz == st.max_size) st.argmax.push_back(x);
    }
    return st;
}

std::vector<int> FiniteLattice::pop_down_image() const {
    std::vector<int> img;
    for (int x = 0; x < n; ++x) img.push_back(pop_down(x));
    std::sort(img.begin(), img.end());
    img.erase(std::unique(img.begin(), img.end()), img.end());
    return img;
}

std::vector<int> FiniteLattice::pop_up_image() const {
    std::vector<int> img;
    for (int x = 0; x < n; ++x) img.push_back(pop_up(x));
    std::sort(img.begin(), img.end());
    img.erase(std::unique(img.begin(), img.end()), img.end());
    return img;
}

FiniteLattice FiniteLattice::dual() const {
    FiniteLattice D;
    D.n = n;
    D.up = down;
    D.down = up;
    D.below = above;
    D.above = below;
    D.bottom = top;
    D.top = bottom;
    return D;
}

FiniteLattice FiniteLattice::interval(int u, int v, std::vector<int>* elems_out) const {
    if (!leq(u, v)) throw NotAnInterval();
    std::vector<int> elems;
    Bitset members = below[std::size_t(v)] & above[std::size_t(u)];
    std::vector<int> local(std::size_t(n), -1);
    members.for_each([&](std::size_t z) {
        local[z] = int(elems.size());
        elems.push_back(int(z));
    });
    std::vector<std::pair<int, int>> covers;
    for (int z : elems)
        for (int y : up[std::size_t(z)])
            if (members.test(std::size_t(y)))
                covers.emplace_back(local[std::size_t(z)], local[std::size_t(y)]);
    if (elems_out) *elems_out = elems;
    return from_covers(int(elems.size()), covers, false);
}

bool FiniteLattice::is_distributive() const {
    build_op_tables();
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z)
                if (meet(x, join(y, z)) != join(meet(x, y), meet(x, z))) return false;
    return true;
}

bool FiniteLattice::is_boolean() const {
    std::size_t k = up[std::size_t(bottom)].size();
    if (k >= 8 * sizeof(std::size_t) || (std::size_t(1) << k) != std::size_t(n)) return false;
    return is_distributive();
}

bool is_boolean_interval(const FiniteLattice& L, int u, int v) {
    return L.interval(u, v).is_boolean();
}

bool is_distributive_interval(const FiniteLattice& L, int u, int v) {
    return L.interval(u, v).is_distributive();
}

// ---------------------------------------------------------------------------
// shard labels

ShardLabeling shard_labeling(const FiniteLattice& L) {
    ShardLabeling lab;
    lab.kappa_of.assign(std::size_t(L.n), -1);
    lab.kappa_inv.assign(std::size_t(L.n), -1);
    for (int x = 0; x < L.n; ++x) {
        if (L.down[std::size_t(x)].size() == 1) lab.jirr.push_back(x);
        if (L.up[std::size_t(x)].size() == 1) lab.mirr.push_back(x);
    }
    for (int j : lab.jirr) {
        int jstar = L.down[std::size_t(j)][0];
        int found = -1;
        for (int m : lab.mirr) {
            int mstar = L.up[std::size_t(m)][0];
            if (L.meet(m, j) == jstar && L.join(m, j) == mstar) {
                if (found >= 0) throw NotSemidistributive("kappa not unique");
                found = m;
            }
        }
        if (found < 0) throw NotSemidistributive("kappa missing");
        lab.kappa_of[std::size_t(j)] = found;
        lab.kappa_inv[std::size_t(found)] = j;
    }
    // kappa must be a bijection JIrr -> MIrr
    if (lab.jirr.size() != lab.mirr.size()) throw NotSemidistributive("irreducible counts differ");
    for (int m : lab.mirr)
        if (lab.kappa_inv[std::size_t(m)] < 0) throw NotSemidistributive("kappa not surjective");
    // edge labels: j_{x,y} unique with j <= y and kappa(j) >= x
    lab.label_up.assign(std::size_t(L.n), {});
    for (int x = 0; x < L.n; ++x) {
        for (int y : L.up[std::size_t(x)]) {
            int found = -1;
            for (int j : lab.jirr) {
                if (L.leq(j, y) && L.leq(x, lab.kappa_of[std::size_t(j)])) {
                    if (found >= 0) throw NotSemidistributive("shard label not unique");
                    found = j;
                }
            }
            if (found < 0) throw NotSemidistributive("shard label missing");
            lab.label_up[std::size_t(x)].push_back(found);
        }
    }
    return lab;
}

int ShardLabeling::edge_label(const FiniteLattice& L, int x, int y) const {
    const auto& ups = L.up[std::size_t(x)];
    for (std::size_t k = 0; k < ups.size(); ++k)
        if (ups[k] == y) return label_up[std::size_t(x)][k];
    throw Error("edge_label: not a cover edge");
}

std::vector<int> ShardLabeling::canonical_join_rep(const FiniteLattice& L, int v) const {
    std::vector<int> out;
    for (int x : L.down[std::size_t(v)]) out.push_back(edge_label(L, x, v));
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<int> ShardLabeling::canonical_meet_rep(const FiniteLattice& L, int v) const {
    std::vector<int> out;
    for (std::size_t k = 0; k < L.up[std::size_t(v)].size(); ++k)
        out.push_back(kappa_of[std::size_t(label_up[std::size_t(v)][k])]);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::vector<int>> galois_graph(const FiniteLattice& L, const ShardLabeling& lab) {
    const std::size_t k = lab.jirr.size();
    std::vector<std::vector<int>> adj(k);
    for (std::size_t a = 0; a < k; ++a)
        for (std::size_t b = 0; b < k; ++b) {
            if (a == b) continue;
            int j = lab.jirr[a], jp = lab.jirr[b];
            if (!L.leq(j, lab.kappa_of[std::size_t(jp)])) adj[a].push_back(int(b));
        }
    return adj;
}

IntPoly facet_polynomial(const FiniteLattice& L, const ShardLabeling& lab) {
    IntPoly p;
    for (int v : L.pop_down_image()) p += IntPoly::q_pow(int(L.up[std::size_t(v)].size()));
    IntPoly check;
    for (int v : L.pop_up_image()) check += IntPoly::q_pow(int(L.down[std::size_t(v)].size()));
    require(p == check, "facet polynomial: pop-down and pop-up sides disagree");
    // |U(v)| equals the number of upper covers because meet-irreducible
    // labels kappa(j_{v,y}) are distinct across edges at v.
    for (int v : L.pop_down_image())
        require(lab.canonical_meet_rep(L, v).size() == L.up[std::size_t(v)].size(),
                "facet polynomial: duplicate canonical meet labels");
    return p;
}

// ---------------------------------------------------------------------------
// congruences

namespace {
struct UnionFind {
    std::vector<int> p;
    explicit UnionFind(int n) : p(std::size_t(n)) { std::iota(p.begin(), p.end(), 0); }
    int find(int x) {
        while (p[std::size_t(x)] != x) {
            p[std::size_t(x)] = p[std::size_t(p[std::size_t(x)])];
            x = p[std::size_t(x)];
        }
        return x;
    }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        p[std::size_t(a)] = b;
        return true;
    }
};
} // namespace

Congruence congruence_closure(const FiniteLattice& L,
                              const std::vector<std::pair<int, int>>& pairs) {
    L.build_op_tables();
    UnionFind uf(L.n);
    std::vector<std::pair<int, int>> work;
    for (auto [a, b] : pairs)
        if (uf.unite(a, b)) work.emplace_back(a, b);
    while (!work.empty()) {
        auto [a, b] = work.back();
        work.pop_back();
        for (int z = 0; z < L.n; ++z) {
            int ma = L.meet(a, z), mb = L.meet(b, z);
            if (uf.unite(ma, mb)) work.emplace_back(ma, mb);
            int ja = L.join(a, z), jb = L.join(b, z);
            if (uf.unite(ja, jb)) work.emplace_back(ja, jb);
        }
    }
    Congruence c;
    c.class_of.assign(std::size_t(L.n), -1);
    std::vector<int> root_to_class(std::size_t(L.n), -1);
    for (int x = 0; x < L.n; ++x) {
        int r = uf.find(x);
        if (root_to_class[std::size_t(r)] < 0) {
            root_to_class[std::size_t(r)] = c.num_classes++;
            c.cmin.push_back(x);
            c.cmax.push_back(x);
        }
        int id = root_to_class[std::size_t(r)];
        c.class_of[std::size_t(x)] = id;
        c.cmin[std::size_t(id)] = L.meet(c.cmin[std::size_t(id)], x);
        c.cmax[std::size_t(id)] = L.join(c.cmax[std::size_t(id)], x);
    }
    // classes are intervals; the extremes must lie in the class
    for (int id = 0; id < c.num_classes; ++id) {
        require(c.class_of[std::size_t(c.cmin[std::size_t(id)])] == id &&
                    c.class_of[std::size_t(c.cmax[std::size_t(id)])] == id,
                "congruence: class not closed under meet/join");
        Bitset inside = L.below[std::size_t(c.cmax[std::size_t(id)])] &
                        L.above[std::size_t(c.cmin[std::size_t(id)])];
        bool ok = true;
        inside.for_each([&](std::size_t z) {
            if (c.class_of[z] != id) ok = false;
        });
        require(ok, "congruence: class is not an interval");
    }
    // pi maps order-preserving on cover edges
    for (int x = 0; x < L.n; ++x)
        for (int y : L.up[std::size_t(x)]) {
            require(L.leq(c.pi_down(x), c.pi_down(y)), "congruence: pi_down not order-preserving");
            require(L.leq(c.pi_up(x), c.pi_up(y)), "congruence: pi_up not order-preserving");
        }
    return c;
}

QuotientLattice quotient_lattice(const FiniteLattice& L, const Congruence& c) {
    QuotientLattice Q;
    Q.rep = c.cmin;
    Q.idx.assign(std::size_t(L.n), -1);
    for (int x = 0; x < L.n; ++x) Q.idx[std::size_t(x)] = c.class_of[std::size_t(x)];
    std::vector<Bitset> leq(std::size_t(c.num_classes), Bitset(std::size_t(c.num_classes)));
    for (int a = 0; a < c.num_classes; ++a)
        for (int b = 0; b < c.num_classes; ++b)
            if (L.leq(c.cmin[std::size_t(b)], c.cmin[std::size_t(a)])) leq[std::size_t(a)].set(std::size_t(b));
    Q.lat = FiniteLattice::from_below_sets(std::move(leq), L.n <= 600);
    return Q;
}

int quotient_pop(const FiniteLattice& L, const Congruence& c, int x) {
    if (c.pi_down(x) != x) throw NotAQuotientRepresentative();
    if (L.down[std::size_t(x)].empty()) return x;
    int acc = -1;
    for (int a : L.down[std::size_t(x)]) {
        int pa = c.pi_down(a);
        acc = acc < 0 ? pa : L.meet(acc, pa);
    }
    return c.pi_down(acc);
}

bool check_pop_updown_identities(const FiniteLattice& L) {
    for (int x = 0; x < L.n; ++x) {
        int d = L.pop_down(x), u = L.pop_up(x);
        if (!L.leq(L.pop_down(u), x)) return false;
        if (!L.leq(x, L.pop_up(d))) return false;
        if (L.pop_down(L.pop_up(d)) != d) return false;
        if (L.pop_up(L.pop_down(u)) != u) return false;
    }
    return true;
}

std::string lattice_dot(const FiniteLattice& L, const std::vector<std::string>& labels,
                        const ShardLabeling* lab) {
    std::ostringstream os;
    os << "digraph hasse {\n  rankdir=BT;\n  node [shape=box];\n";
    for (int x = 0; x < L.n; ++x) {
        os << "  v" << x << " [label=\"";
        os << (x < int(labels.size()) ? labels[std::size_t(x)] : std::to_string(x));
        os << "\"];\n";
    }
    for (int x = 0; x < L.n; ++x)
        for (std::size_t k = 0; k < L.up[std::size_t(x)].size(); ++k) {
            os << "  v" << x << " -> v" << L.up[std::size_t(x)][k];
            if (lab) os << " [label=\"" << lab->label_up[std::size_t(x)][k] << "\"]";
            os << ";\n";
        }
    os << "}\n";
    return os.str();
}

} // namespace cambpop

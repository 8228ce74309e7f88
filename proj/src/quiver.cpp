#include "cambpop/quiver.hpp"

#include <algorithm>
#include <map>

namespace cambpop {

Quiver Quiver::of_coxeter(const CoxeterDiagram& dia, const CoxeterElement& c) {
    if (!dia.simply_laced() || dia.type == CoxType::I2 || dia.type == CoxType::H3 ||
        dia.type == CoxType::H4)
        throw NotSimplyLaced();
    Quiver q;
    q.n = dia.rank;
    std::vector<int> pos(std::size_t(dia.rank));
    for (std::size_t k = 0; k < c.word.size(); ++k) pos[std::size_t(c.word[k])] = int(k);
    for (auto [u, v] : dia.edges()) {
        if (pos[std::size_t(u)] < pos[std::size_t(v)]) q.arrows.emplace_back(u, v);
        else q.arrows.emplace_back(v, u);
    }
    return q;
}

Rep Rep::zero(const Quiver& q) {
    Rep m;
    m.dim.assign(std::size_t(q.n), 0);
    for (std::size_t a = 0; a < q.arrows.size(); ++a) m.mat.emplace_back(0, 0);
    return m;
}

Rep Rep::simple(const Quiver& q, int vertex) {
    Rep m = zero(q);
    m.dim[std::size_t(vertex)] = 1;
    for (std::size_t a = 0; a < q.arrows.size(); ++a)
        m.mat[a] = QMat(m.dim[std::size_t(q.arrows[a].second)], m.dim[std::size_t(q.arrows[a].first)]);
    return m;
}

int Rep::total_dim() const {
    int s = 0;
    for (int d : dim) s += d;
    return s;
}

Rep direct_sum(const Quiver& q, const std::vector<const Rep*>& parts) {
    Rep out;
    out.dim.assign(std::size_t(q.n), 0);
    for (const Rep* p : parts)
        for (int i = 0; i < q.n; ++i) out.dim[std::size_t(i)] += p->dim[std::size_t(i)];
    for (std::size_t a = 0; a < q.arrows.size(); ++a) {
        auto [u, v] = q.arrows[a];
        QMat m(out.dim[std::size_t(v)], out.dim[std::size_t(u)]);
        int ro = 0, co = 0;
        for (const Rep* p : parts) {
            for (int r = 0; r < p->dim[std::size_t(v)]; ++r)
                for (int c = 0; c < p->dim[std::size_t(u)]; ++c)
                    m(ro + r, co + c) = p->mat[a](r, c);
            ro += p->dim[std::size_t(v)];
            co += p->dim[std::size_t(u)];
        }
        out.mat.push_back(std::move(m));
    }
    return out;
}

bool is_morphism(const Quiver& q, const Rep& a, const Rep& b, const RepMap& f) {
    for (std::size_t k = 0; k < q.arrows.size(); ++k) {
        auto [u, v] = q.arrows[k];
        if (!(b.mat[k] * f[std::size_t(u)] == f[std::size_t(v)] * a.mat[k])) return false;
    }
    return true;
}

bool map_injective(const RepMap& f) {
    for (const QMat& m : f)
        if (m.rank() != m.cols()) return false;
    return true;
}

bool map_surjective(const Rep& b, const RepMap& f) {
    for (std::size_t i = 0; i < f.size(); ++i)
        if (f[i].rank() != b.dim[i]) return false;
    return true;
}

RepMap compose(const RepMap& g, const RepMap& f) {
    RepMap out;
    for (std::size_t i = 0; i < f.size(); ++i) out.push_back(g[i] * f[i]);
    return out;
}

namespace {

// Linear system whose kernel is Hom(a,b) and whose cokernel is Ext^1(a,b):
// unknowns phi_i stacked vertex by vertex, equations per arrow.
struct HomSystem {
    std::vector<int> var_off, eq_off;
    int vars = 0, eqs = 0;
    QMat mat;

    HomSystem(const Quiver& q, const Rep& a, const Rep& b) {
        var_off.resize(std::size_t(q.n));
        for (int i = 0; i < q.n; ++i) {
            var_off[std::size_t(i)] = vars;
            vars += a.dim[std::size_t(i)] * b.dim[std::size_t(i)];
        }
        eq_off.resize(q.arrows.size());
        for (std::size_t k = 0; k < q.arrows.size(); ++k) {
            eq_off[k] = eqs;
            eqs += a.dim[std::size_t(q.arrows[k].first)] * b.dim[std::size_t(q.arrows[k].second)];
        }
        mat = QMat(eqs, vars);
        for (std::size_t k = 0; k < q.arrows.size(); ++k) {
            auto [u, v] = q.arrows[k];
            int du_a = a.dim[std::size_t(u)], dv_b = b.dim[std::size_t(v)];
            // equation (r, c) over r < dv_b, c < du_a:
            //   sum_m b.mat[k](r,m) phi_u(m,c) - sum_l phi_v(r,l) a.mat[k](l,c) = 0
            for (int r = 0; r < dv_b; ++r)
                for (int c = 0; c < du_a; ++c) {
                    int eq = eq_off[k] + r * du_a + c;
                    for (int m = 0; m < b.dim[std::size_t(u)]; ++m)
                        mat(eq, var_off[std::size_t(u)] + m * du_a + c) += b.mat[k](r, m);
                    for (int l = 0; l < a.dim[std::size_t(v)]; ++l)
                        mat(eq, var_off[std::size_t(v)] + r * a.dim[std::size_t(v)] + l) -=
                            a.mat[k](l, c);
                }
        }
    }

    RepMap unpack_var(const Quiver& q, const Rep& a, const Rep& b, const QMat& col,
                      int colidx) const {
        RepMap f;
        for (int i = 0; i < q.n; ++i) {
            QMat m(b.dim[std::size_t(i)], a.dim[std::size_t(i)]);
            for (int r = 0; r < b.dim[std::size_t(i)]; ++r)
                for (int c = 0; c < a.dim[std::size_t(i)]; ++c)
                    m(r, c) = col(var_off[std::size_t(i)] + r * a.dim[std::size_t(i)] + c, colidx);
            f.push_back(std::move(m));
        }
        return f;
    }
};

} // namespace

std::vector<RepMap> hom_basis(const Quiver& q, const Rep& a, const Rep& b) {
    HomSystem sys(q, a, b);
    QMat ker = sys.mat.kernel();
    std::vector<RepMap> out;
    for (int j = 0; j < ker.cols(); ++j) out.push_back(sys.unpack_var(q, a, b, ker, j));
    for (const RepMap& f : out) require(is_morphism(q, a, b, f), "hom_basis produced a non-morphism");
    return out;
}

int hom_dim(const Quiver& q, const Rep& a, const Rep& b) {
    HomSystem sys(q, a, b);
    return sys.vars - sys.mat.rank();
}

int ext_dim(const Quiver& q, const Rep& a, const Rep& b) {
    HomSystem sys(q, a, b);
    int rank = sys.mat.rank();
    int ext = sys.eqs - rank;
    // hereditary Euler identity: hom - ext = <dim a, dim b>
    long long hom = sys.vars - rank;
    require(hom - ext == euler_form(q, a.dim, b.dim), "ext_dim: Euler form mismatch");
    return ext;
}

long long euler_form(const Quiver& q, const std::vector<int>& d, const std::vector<int>& e) {
    long long s = 0;
    for (std::size_t i = 0; i < d.size(); ++i) s += (long long)d[i] * e[i];
    for (auto [u, v] : q.arrows) s -= (long long)d[std::size_t(u)] * e[std::size_t(v)];
    return s;
}

Rep kernel_rep(const Quiver& q, const Rep& a, const Rep& b, const RepMap& f, RepMap* incl) {
    require(is_morphism(q, a, b, f), "kernel_rep: not a morphism");
    Rep k;
    std::vector<QMat> basis(std::size_t(q.n));
    k.dim.assign(std::size_t(q.n), 0);
    for (int i = 0; i < q.n; ++i) {
        basis[std::size_t(i)] = f[std::size_t(i)].kernel();
        k.dim[std::size_t(i)] = basis[std::size_t(i)].cols();
    }
    for (std::size_t t = 0; t < q.arrows.size(); ++t) {
        auto [u, v] = q.arrows[t];
        // solve basis_v * X = a.mat * basis_u
        QMat rhs = a.mat[t] * basis[std::size_t(u)];
        QMat x;
        bool ok = basis[std::size_t(v)].solve(rhs, x);
        require(ok, "kernel_rep: arrow map does not restrict");
        k.mat.push_back(std::move(x));
    }
    if (incl) *incl = basis;
    return k;
}

Rep coker_rep(const Quiver& q, const Rep& a, const Rep& b, const RepMap& f, RepMap* proj) {
    require(is_morphism(q, a, b, f), "coker_rep: not a morphism");
    Rep c;
    std::vector<QMat> pi(std::size_t(q.n)), sigma(std::size_t(q.n));
    c.dim.assign(std::size_t(q.n), 0);
    for (int i = 0; i < q.n; ++i) {
        coker_projection(f[std::size_t(i)], pi[std::size_t(i)], sigma[std::size_t(i)]);
        c.dim[std::size_t(i)] = pi[std::size_t(i)].rows();
    }
    for (std::size_t t = 0; t < q.arrows.size(); ++t) {
        auto [u, v] = q.arrows[t];
        c.mat.push_back(pi[std::size_t(v)] * b.mat[t] * sigma[std::size_t(u)]);
    }
    if (proj) *proj = pi;
    // induced maps must intertwine (independence from the section choice)
    require(is_morphism(q, b, c, pi), "coker_rep: projection not a morphism");
    return c;
}

std::vector<std::vector<QMat>> ext_basis(const Quiver& q, const Rep& a, const Rep& b) {
    HomSystem sys(q, a, b);
    // cokernel representatives of the equation space: unit vectors completing
    // the column space of sys.mat (transposed view: rows of the system span
    // im(Phi) inside the psi-space)
    QMat pi, sigma;
    coker_projection(sys.mat, pi, sigma);
    std::vector<std::vector<QMat>> classes;
    for (int j = 0; j < sigma.cols(); ++j) {
        std::vector<QMat> psi;
        for (std::size_t k = 0; k < q.arrows.size(); ++k) {
            auto [u, v] = q.arrows[k];
            int du_a = a.dim[std::size_t(u)];
            QMat m(b.dim[std::size_t(v)], du_a);
            for (int r = 0; r < b.dim[std::size_t(v)]; ++r)
                for (int c2 = 0; c2 < du_a; ++c2)
                    m(r, c2) = sigma(sys.eq_off[k] + r * du_a + c2, j);
            psi.push_back(std::move(m));
        }
        classes.push_back(std::move(psi));
    }
    return classes;
}

Rep middle_term(const Quiver& q, const Rep& a, const Rep& b, const std::vector<QMat>& psi,
                RepMap* incl_b, RepMap* proj_a) {
    // 0 -> b -> E -> a -> 0 with E_i = b_i (+) a_i
    Rep e;
    e.dim.assign(std::size_t(q.n), 0);
    for (int i = 0; i < q.n; ++i) e.dim[std::size_t(i)] = b.dim[std::size_t(i)] + a.dim[std::size_t(i)];
    for (std::size_t k = 0; k < q.arrows.size(); ++k) {
        auto [u, v] = q.arrows[k];
        QMat m(e.dim[std::size_t(v)], e.dim[std::size_t(u)]);
        for (int r = 0; r < b.dim[std::size_t(v)]; ++r) {
            for (int c = 0; c < b.dim[std::size_t(u)]; ++c) m(r, c) = b.mat[k](r, c);
            for (int c = 0; c < a.dim[std::size_t(u)]; ++c)
                m(r, b.dim[std::size_t(u)] + c) = psi[k](r, c);
        }
        for (int r = 0; r < a.dim[std::size_t(v)]; ++r)
            for (int c = 0; c < a.dim[std::size_t(u)]; ++c)
                m(b.dim[std::size_t(v)] + r, b.dim[std::size_t(u)] + c) = a.mat[k](r, c);
        e.mat.push_back(std::move(m));
    }
    if (incl_b) {
        incl_b->clear();
        for (int i = 0; i < q.n; ++i) {
            QMat m(e.dim[std::size_t(i)], b.dim[std::size_t(i)]);
            for (int r = 0; r < b.dim[std::size_t(i)]; ++r) m(r, r) = 1;
            incl_b->push_back(std::move(m));
        }
    }
    if (proj_a) {
        proj_a->clear();
        for (int i = 0; i < q.n; ++i) {
            QMat m(a.dim[std::size_t(i)], e.dim[std::size_t(i)]);
            for (int r = 0; r < a.dim[std::size_t(i)]; ++r) m(r, b.dim[std::size_t(i)] + r) = 1;
            proj_a->push_back(std::move(m));
        }
    }
    return e;
}

Rep socle_quotient(const Quiver& q, const Rep& m, Rep* soc) {
    // socle at vertex i: intersection of the kernels of outgoing arrows
    RepMap soc_incl(std::size_t(q.n));
    for (int i = 0; i < q.n; ++i) {
        QMat stacked(0, m.dim[std::size_t(i)]);
        for (std::size_t k = 0; k < q.arrows.size(); ++k)
            if (q.arrows[k].first == i) stacked = QMat::vstack(stacked, m.mat[k]);
        soc_incl[std::size_t(i)] = stacked.kernel();
    }
    if (soc) {
        soc->dim.assign(std::size_t(q.n), 0);
        soc->mat.clear();
        for (int i = 0; i < q.n; ++i) soc->dim[std::size_t(i)] = soc_incl[std::size_t(i)].cols();
        for (std::size_t k = 0; k < q.arrows.size(); ++k) {
            auto [u, v] = q.arrows[k];
            soc->mat.emplace_back(soc->dim[std::size_t(v)], soc->dim[std::size_t(u)]);
        }
    }
    // quotient by the (sub)representation spanned by the socle
    Rep sub;
    sub.dim.assign(std::size_t(q.n), 0);
    for (int i = 0; i < q.n; ++i) sub.dim[std::size_t(i)] = soc_incl[std::size_t(i)].cols();
    for (std::size_t k = 0; k < q.arrows.size(); ++k) {
        auto [u, v] = q.arrows[k];
        sub.mat.emplace_back(sub.dim[std::size_t(v)], sub.dim[std::size_t(u)]);
        (void)u;
    }
    return coker_rep(q, sub, m, soc_incl, nullptr);
}

// ---------------------------------------------------------------------------
// RepCat: indecomposables via reflection functors

namespace {

bool is_sink(const Quiver& q, int v) {
    for (auto [u, w] : q.arrows)
        if (u == v) return false;
    return true;
}

Quiver flip_at(const Quiver& q, int v) {
    Quiver out = q;
    for (auto& [u, w] : out.arrows)
        if (u == v || w == v) std::swap(u, w);
    return out;
}

// Reflection at a source v: coker of the assembled map out of v.
Rep reflect_source(const Quiver& q, int v, const Rep& m, Quiver* out_q) {
    std::vector<std::size_t> at;
    for (std::size_t k = 0; k < q.arrows.size(); ++k)
        if (q.arrows[k].first == v) at.push_back(k);
    QMat stacked(0, m.dim[std::size_t(v)]);
    for (std::size_t k : at) stacked = QMat::vstack(stacked, m.mat[k]);
    QMat pi, sigma;
    coker_projection(stacked, pi, sigma);
    Rep n = m;
    n.dim[std::size_t(v)] = pi.rows();
    Quiver nq = flip_at(q, v);
    // rebuild matrices in nq's arrow order: arrows not at v unchanged;
    // arrows u -> v in nq come from v -> u in q
    n.mat.assign(q.arrows.size(), QMat());
    for (std::size_t k = 0; k < nq.arrows.size(); ++k) {
        auto [u, w] = nq.arrows[k];
        if (u != v && w != v) {
            // same arrow exists in q
            for (std::size_t k2 = 0; k2 < q.arrows.size(); ++k2)
                if (q.arrows[k2] == nq.arrows[k]) n.mat[k] = m.mat[k2];
        } else {
            require(w == v, "reflect_source: unexpected arrow direction");
            // u -> v: inclusion of M_u into the stack, then project to coker
            int offset = 0;
            QMat inc(stacked.rows(), m.dim[std::size_t(u)]);
            for (std::size_t k2 : at) {
                auto [vv, uu] = q.arrows[k2];
                (void)vv;
                if (uu == u)
                    for (int r = 0; r < m.dim[std::size_t(u)]; ++r) inc(offset + r, r) = 1;
                offset += m.dim[std::size_t(uu)];
            }
            n.mat[k] = pi * inc;
        }
    }
    if (out_q) *out_q = nq;
    return n;
}

} // namespace

RepCat::RepCat(const CoxGroup& W, const CoxeterElement& c) : W_(&W), c_(c) {
    q_ = Quiver::of_coxeter(W.diagram(), c);
    const RootSystem& rs = W.roots();
    require(!rs.int_coords.empty(), "RepCat needs crystallographic coordinates");

    // admissible sink sequence: reverse topological order of Q_c, cycled
    std::vector<int> sink_order(c_.word.rbegin(), c_.word.rend());

    for (int r = 0; r < rs.N; ++r) {
        // walk the root down to a simple along the sink sequence
        std::vector<std::int64_t> beta = rs.int_coords[std::size_t(r)];
        std::vector<int> path;  // applied sinks, in order
        Quiver cur = q_;
        int guard = 0;
        int simple_vertex = -1;
        std::vector<Quiver> quivers{cur};
        while (true) {
            int v = sink_order[std::size_t(path.size() % sink_order.size())];
            require(is_sink(cur, v), "RepCat: sequence vertex is not a sink");
            bool is_simple = true;
            for (int i = 0; i < q_.n; ++i)
                if (beta[std::size_t(i)] != (i == v ? 1 : 0)) is_simple = false;
            if (is_simple) {
                simple_vertex = v;
                break;
            }
            // apply s_v to the root coordinates (simply laced Cartan)
            std::int64_t acc = 0;
            for (int j = 0; j < q_.n; ++j) {
                int bond = W.diagram().bond[std::size_t(v)][std::size_t(j)];
                std::int64_t cvj = (j == v) ? 2 : (bond == 3 ? -1 : 0);
                acc += cvj * beta[std::size_t(j)];
            }
            beta[std::size_t(v)] -= acc;
            for (std::int64_t x : beta) require(x >= 0, "RepCat: root walk went negative");
            path.push_back(v);
            cur = flip_at(cur, v);
            quivers.push_back(cur);
            require(++guard < 64 * q_.n, "RepCat: root walk did not terminate");
        }
        // build S(simple_vertex) over the final quiver, reflect back down
        Rep m = Rep::simple(quivers.back(), simple_vertex);
        for (std::size_t k = path.size(); k-- > 0;) {
            // path[k] is a sink of quivers[k], hence a source of quivers[k+1]
            Quiver back;
            m = reflect_source(quivers[k + 1], path[k], m, &back);
            for (std::size_t t = 0; t < back.arrows.size(); ++t)
                require(back.arrows[t] == quivers[k].arrows[t] ||
                            std::find(quivers[k].arrows.begin(), quivers[k].arrows.end(),
                                      back.arrows[t]) != quivers[k].arrows.end(),
                        "RepCat: quiver mismatch on the way down");
            // reorder matrices to quivers[k]'s arrow list
            Rep fixed = m;
            for (std::size_t t = 0; t < quivers[k].arrows.size(); ++t)
                for (std::size_t t2 = 0; t2 < back.arrows.size(); ++t2)
                    if (back.arrows[t2] == quivers[k].arrows[t]) fixed.mat[t] = m.mat[t2];
            m = fixed;
        }
        // dimension vector must equal the original root
        for (int i = 0; i < q_.n; ++i)
            require((std::int64_t)m.dim[std::size_t(i)] == rs.int_coords[std::size_t(r)][std::size_t(i)],
                    "RepCat: reflected dimension vector mismatch");
        indec_.push_back(std::move(m));
    }

    hom_.assign(std::size_t(rs.N), std::vector<int>(std::size_t(rs.N), 0));
    ext_.assign(std::size_t(rs.N), std::vector<int>(std::size_t(rs.N), 0));
    for (int a = 0; a < rs.N; ++a)
        for (int b = 0; b < rs.N; ++b) {
            hom_[std::size_t(a)][std::size_t(b)] = hom_dim(q_, indec_[std::size_t(a)], indec_[std::size_t(b)]);
            ext_[std::size_t(a)][std::size_t(b)] = ext_dim(q_, indec_[std::size_t(a)], indec_[std::size_t(b)]);
        }
    for (int a = 0; a < rs.N; ++a) {
        require(hom_[std::size_t(a)][std::size_t(a)] == 1, "indecomposable is not a brick");
        require(ext_[std::size_t(a)][std::size_t(a)] == 0, "indecomposable is not rigid");
    }
}

int RepCat::root_of(const Rep& m) const {
    for (int r = 0; r < num_indec(); ++r)
        if (indec_[std::size_t(r)].dim == m.dim) {
            std::vector<int> mult = decompose(m);
            bool single = true;
            for (int s = 0; s < num_indec(); ++s)
                if (mult[std::size_t(s)] != (s == r ? 1 : 0)) single = false;
            if (single) return r;
        }
    return -1;
}

std::vector<int> RepCat::decompose(const Rep& m) const {
    const int N = num_indec();
    // h[a] = dim Hom(M_a, m) = sum_b mult_b hom(a, b); the Hom matrix is
    // unitriangular in a directed order, hence invertible over Z.
    QMat H(N, N), h(N, 1);
    for (int a = 0; a < N; ++a) {
        for (int b = 0; b < N; ++b) H(a, b) = hom_[std::size_t(a)][std::size_t(b)];
        h(a, 0) = hom_dim(q_, indec_[std::size_t(a)], m);
    }
    QMat x;
    bool ok = H.solve(h, x);
    require(ok, "decompose: Hom matrix not invertible");
    std::vector<int> mult(std::size_t(N), 0);
    long long total = 0;
    for (int b = 0; b < N; ++b) {
        require(x(b, 0).den == 1 && x(b, 0).num >= 0, "decompose: non-integral multiplicity");
        mult[std::size_t(b)] = int(x(b, 0).num);
        total += x(b, 0).num * indec_[std::size_t(b)].total_dim();
    }
    require(total == m.total_dim(), "decompose: dimension mismatch");
    return mult;
}

Bitset RepCat::perp_right(const Bitset& c) const {
    Bitset out{std::size_t(num_indec())};
    for (int m = 0; m < num_indec(); ++m) {
        bool ok = true;
        c.for_each([&](std::size_t x) {
            if (hom_[x][std::size_t(m)] != 0) ok = false;
        });
        if (ok) out.set(std::size_t(m));
    }
    return out;
}

Bitset RepCat::perp_left(const Bitset& c) const {
    Bitset out{std::size_t(num_indec())};
    for (int m = 0; m < num_indec(); ++m) {
        bool ok = true;
        c.for_each([&](std::size_t x) {
            if (hom_[std::size_t(m)][x] != 0) ok = false;
        });
        if (ok) out.set(std::size_t(m));
    }
    return out;
}

Bitset RepCat::t_closure(const Bitset& c) const { return perp_left(perp_right(c)); }

bool RepCat::is_torsion_class(const Bitset& t) const { return t_closure(t) == t; }

Bitset RepCat::filt_of_semibrick(const Bitset& x) const {
    // Filt(X) = T(X) /\ (pop(T(X)))^perp with pop(T) = T /\ perp(X)
    Bitset t = t_closure(x);
    Bitset pop = t & perp_left(x);
    Bitset out = t & perp_right(pop);
    return out;
}

std::vector<Bitset> RepCat::all_torsion_classes() const {
    const int N = num_indec();
    require(N <= 20, "all_torsion_classes: subset enumeration too large");
    std::vector<Bitset> out;
    std::map<std::vector<int>, bool> seen;
    for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << N); ++mask) {
        Bitset c{std::size_t(N)};
        for (int b = 0; b < N; ++b)
            if (mask >> b & 1) c.set(std::size_t(b));
        Bitset t = t_closure(c);
        auto key = t.bits();
        if (!seen.count(key)) {
            seen[key] = true;
            out.push_back(t);
        }
    }
    return out;
}

// ---------------------------------------------------------------------------

int TorsLattice::index_of(const Bitset& t) const {
    for (int x = 0; x < lat.n; ++x)
        if (cls[std::size_t(x)] == t) return x;
    throw Error("TorsLattice: class not found");
}

std::vector<int> TorsLattice::d_bricks(int x) const {
    std::vector<int> out;
    const Bitset& t = cls[std::size_t(x)];
    for (int lo : lat.down[std::size_t(x)]) {
        const Bitset& tp = cls[std::size_t(lo)];
        // label = unique brick in T /\ (T')^perp
        Bitset cand = t & cat->perp_right(tp);
        require(cand.count() == 1, "brick label of a lower cover not unique");
        out.push_back(cand.bits()[0]);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<int> TorsLattice::u_bricks(int x) const {
    std::vector<int> out;
    const Bitset& t = cls[std::size_t(x)];
    for (int hi : lat.up[std::size_t(x)]) {
        Bitset cand = cls[std::size_t(hi)] & cat->perp_right(t);
        require(cand.count() == 1, "brick label of an upper cover not unique");
        out.push_back(cand.bits()[0]);
    }
    std::sort(out.begin(), out.end());
    return out;
}

TorsLattice build_tors_lattice(const RepCat& cat) {
    TorsLattice tl;
    tl.cat = &cat;
    tl.cls = cat.all_torsion_classes();
    const int n = int(tl.cls.size());
    std::vector<Bitset> leq;
    leq.assign(std::size_t(n), Bitset(std::size_t(n)));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (tl.cls[std::size_t(b)].subset_of(tl.cls[std::size_t(a)]))
                leq[std::size_t(a)].set(std::size_t(b));
    tl.lat = FiniteLattice::from_below_sets(std::move(leq), n <= 400);
    return tl;
}

Bitset phi_c(const RepCat& cat, const Elt& w) {
    return cat.group().left_inversions(w);
}

bool detect_serre(const RepCat& cat, const Bitset& t) {
    // Serre iff T consists of the modules supported on the simple roots in T
    std::vector<bool> allowed(std::size_t(cat.quiver().n), false);
    const RootSystem& rs = cat.group().roots();
    for (int i = 0; i < cat.quiver().n; ++i)
        if (t.test(std::size_t(rs.simple_root[std::size_t(i)]))) allowed[std::size_t(i)] = true;
    for (int r = 0; r < cat.num_indec(); ++r) {
        bool supported = true;
        for (int i = 0; i < cat.quiver().n; ++i)
            if (rs.int_coords[std::size_t(r)][std::size_t(i)] != 0 && !allowed[std::size_t(i)])
                supported = false;
        if (supported != t.test(std::size_t(r))) return false;
    }
    return true;
}

std::optional<std::vector<int>> detect_projective_gen(const RepCat& cat, const TorsLattice& tors,
                                                      const Bitset& t) {
    const RootSystem& rs = cat.group().roots();
    std::vector<int> simples;
    for (int i = 0; i < cat.quiver().n; ++i)
        if (t.test(std::size_t(rs.simple_root[std::size_t(i)]))) simples.push_back(i);
    // T must be the largest torsion class whose simple content is exactly S
    for (int x = 0; x < tors.lat.n; ++x) {
        const Bitset& other = tors.cls[std::size_t(x)];
        std::vector<int> os;
        for (int i = 0; i < cat.quiver().n; ++i)
            if (other.test(std::size_t(rs.simple_root[std::size_t(i)]))) os.push_back(i);
        if (os == simples && !other.subset_of(t)) return std::nullopt;
    }
    // cross-check: T = Gen(P(S)): quotient-closure test via surjectivity of
    // the right add(P)-approximation
    std::vector<int> proot = projective_root(cat);
    Bitset gen{std::size_t(cat.num_indec())};
    {
        std::vector<const Rep*> gens;
        for (int i : simples) gens.push_back(&cat.indec(proot[std::size_t(i)]));
        for (int r = 0; r < cat.num_indec(); ++r) {
            // r is a quotient of a sum of the P(i) iff the evaluation map
            // (+) Hom(P, M) (x) P -> M is surjective; check columnwise rank
            const Rep& m = cat.indec(r);
            std::vector<QMat> stacked(std::size_t(cat.quiver().n));
            for (int i = 0; i < cat.quiver().n; ++i) stacked[std::size_t(i)] = QMat(m.dim[std::size_t(i)], 0);
            for (const Rep* p : gens)
                for (const RepMap& f : hom_basis(cat.quiver(), *p, m))
                    for (int i = 0; i < cat.quiver().n; ++i)
                        stacked[std::size_t(i)] = QMat::hstack(stacked[std::size_t(i)], f[std::size_t(i)]);
            bool surj = true;
            for (int i = 0; i < cat.quiver().n; ++i)
                if (stacked[std::size_t(i)].rank() != m.dim[std::size_t(i)]) surj = false;
            if (surj) gen.set(std::size_t(r));
        }
    }
    require(gen == t, "detect_projective_gen: Gen(P) disagrees with the maximality test");
    return simples;
}

std::vector<int> projective_root(const RepCat& cat) {
    // dim P(i) = rho_i = s_{i_n} ... s_{i_{k+1}}(alpha_{i_k}); certified by
    // hom(P(i), S(j)) = delta_ij and Ext^1(P(i), -) = 0.
    const CoxGroup& W = cat.group();
    const std::vector<int>& word = cat.coxeter().word;
    std::vector<int> out(std::size_t(W.rank()), -1);
    Elt g = W.identity();
    for (std::size_t k = word.size(); k-- > 0;) {
        int r = W.roots().simple_root[std::size_t(word[k])];
        int img = g.act[std::size_t(r)];
        require(img > 0, "projective_root: suffix image must stay positive");
        out[std::size_t(word[k])] = img - 1;
        g = W.mult_right(g, word[k]);
    }
    for (int i = 0; i < W.rank(); ++i) {
        int p = out[std::size_t(i)];
        for (int j = 0; j < W.rank(); ++j) {
            int sj = W.roots().simple_root[std::size_t(j)];
            require(cat.hom(p, sj) == (i == j ? 1 : 0), "projective_root: top mismatch");
        }
        for (int s = 0; s < cat.num_indec(); ++s)
            require(cat.ext(p, s) == 0, "projective_root: not projective");
    }
    return out;
}

std::vector<int> injective_root(const RepCat& cat) {
    // dim I(i) via prefixes: s_{i_1} ... s_{i_{k-1}}(alpha_{i_k})
    const CoxGroup& W = cat.group();
    const std::vector<int>& word = cat.coxeter().word;
    std::vector<int> out(std::size_t(W.rank()), -1);
    Elt g = W.identity();
    for (std::size_t k = 0; k < word.size(); ++k) {
        int r = W.roots().simple_root[std::size_t(word[k])];
        int img = g.act[std::size_t(r)];
        require(img > 0, "injective_root: prefix image must stay positive");
        out[std::size_t(word[k])] = img - 1;
        g = W.mult(g, W.from_word({word[k]}));
    }
    for (int i = 0; i < W.rank(); ++i) {
        int p = out[std::size_t(i)];
        for (int j = 0; j < W.rank(); ++j) {
            int sj = W.roots().simple_root[std::size_t(j)];
            require(cat.hom(sj, p) == (i == j ? 1 : 0), "injective_root: socle mismatch");
        }
        for (int s = 0; s < cat.num_indec(); ++s)
            require(cat.ext(s, p) == 0, "injective_root: not injective");
    }
    return out;
}

} // namespace cambpop

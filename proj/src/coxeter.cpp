#include "cambpop/coxeter.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <tuple>
#include <type_traits>
#include <unordered_map>

namespace cambpop {

// ---------------------------------------------------------------------------
// CoxeterDiagram

static std::vector<std::vector<int>> path_bonds(int n) {
    std::vector<std::vector<int>> b(std::size_t(n), std::vector<int>(std::size_t(n), 2));
    for (int i = 0; i < n; ++i) b[std::size_t(i)][std::size_t(i)] = 1;
    for (int i = 0; i + 1 < n; ++i) {
        b[std::size_t(i)][std::size_t(i + 1)] = 3;
        b[std::size_t(i + 1)][std::size_t(i)] = 3;
    }
    return b;
}

static void set_bond(std::vector<std::vector<int>>& b, int i, int j, int m) {
    b[std::size_t(i)][std::size_t(j)] = m;
    b[std::size_t(j)][std::size_t(i)] = m;
}

static CoxeterDiagram make_unchecked(CoxType t, int p) {
    CoxeterDiagram d;
    d.type = t;
    switch (t) {
    case CoxType::A:
        require(p >= 1, "A_n needs n >= 1");
        d.rank = p;
        d.bond = path_bonds(p);
        break;
    case CoxType::B:
        require(p >= 2, "B_n needs n >= 2");
        d.rank = p;
        d.bond = path_bonds(p);
        set_bond(d.bond, p - 2, p - 1, 4);
        break;
    case CoxType::D: {
        require(p >= 4, "D_n needs n >= 4");
        d.rank = p;
        // labels s_0..s_{n-1}; edges {0,2},{1,2},{2,3},...,{n-2,n-1}
        d.bond.assign(std::size_t(p), std::vector<int>(std::size_t(p), 2));
        for (int i = 0; i < p; ++i) d.bond[std::size_t(i)][std::size_t(i)] = 1;
        set_bond(d.bond, 0, 2, 3);
        set_bond(d.bond, 1, 2, 3);
        for (int i = 2; i + 1 < p; ++i) set_bond(d.bond, i, i + 1, 3);
        break;
    }
    case CoxType::E6:
    case CoxType::E7:
    case CoxType::E8: {
        int n = t == CoxType::E6 ? 6 : (t == CoxType::E7 ? 7 : 8);
        d.rank = n;
        d.bond.assign(std::size_t(n), std::vector<int>(std::size_t(n), 2));
        for (int i = 0; i < n; ++i) d.bond[std::size_t(i)][std::size_t(i)] = 1;
        // Bourbaki (1-based): 1-3, 3-4, 2-4, 4-5, 5-6, 6-7, 7-8
        set_bond(d.bond, 0, 2, 3);
        set_bond(d.bond, 2, 3, 3);
        set_bond(d.bond, 1, 3, 3);
        for (int i = 4; i < n; ++i) set_bond(d.bond, i - 1, i, 3);
        break;
    }
    case CoxType::F4:
        d.rank = 4;
        d.bond = path_bonds(4);
        set_bond(d.bond, 1, 2, 4);
        break;
    case CoxType::G2:
        d.rank = 2;
        d.bond = path_bonds(2);
        set_bond(d.bond, 0, 1, 6);
        break;
    case CoxType::H3:
        d.rank = 3;
        d.bond = path_bonds(3);
        set_bond(d.bond, 0, 1, 5);
        break;
    case CoxType::H4:
        d.rank = 4;
        d.bond = path_bonds(4);
        set_bond(d.bond, 0, 1, 5);
        break;
    case CoxType::I2:
        require(p >= 3, "I2(m) needs m >= 3");
        d.rank = 2;
        d.m_param = p;
        d.bond = path_bonds(2);
        set_bond(d.bond, 0, 1, p);
        break;
    }
    return d;
}

CoxeterDiagram CoxeterDiagram::make(CoxType t, int p) {
    CoxeterDiagram d = make_unchecked(t, p);
    d.validate();
    return d;
}

CoxeterDiagram CoxeterDiagram::parse(const std::string& s) {
    auto bad = [&]() -> CoxeterDiagram { throw Error("cannot parse type: " + s); };
    if (s.size() < 2) return bad();
    char t = s[0];
    std::string rest = s.substr(1);
    if (t == 'I') {
        // "I2:m" or "I2(m)"
        auto pos = rest.find_first_of(":(");
        if (pos == std::string::npos) return bad();
        int m = std::stoi(rest.substr(pos + 1));
        return make(CoxType::I2, m);
    }
    int p = std::stoi(rest);
    switch (t) {
    case 'A': return make(CoxType::A, p);
    case 'B': return make(CoxType::B, p);
    case 'C': return make(CoxType::B, p);
    case 'D': return make(CoxType::D, p);
    case 'E':
        if (p == 6) return make(CoxType::E6, 6);
        if (p == 7) return make(CoxType::E7, 7);
        if (p == 8) return make(CoxType::E8, 8);
        return bad();
    case 'F':
        if (p == 4) return make(CoxType::F4, 4);
        return bad();
    case 'G':
        if (p == 2) return make(CoxType::G2, 2);
        return bad();
    case 'H':
        if (p == 3) return make(CoxType::H3, 3);
        if (p == 4) return make(CoxType::H4, 4);
        return bad();
    default: return bad();
    }
}

CoxeterDiagram CoxeterDiagram::from_bond(const std::vector<std::vector<int>>& bond) {
    const int n = int(bond.size());
    std::vector<std::pair<CoxType, int>> candidates{{CoxType::A, n}};
    if (n >= 2) candidates.emplace_back(CoxType::B, n);
    if (n >= 4) candidates.emplace_back(CoxType::D, n);
    if (n == 6) candidates.emplace_back(CoxType::E6, 6);
    if (n == 7) candidates.emplace_back(CoxType::E7, 7);
    if (n == 8) candidates.emplace_back(CoxType::E8, 8);
    if (n == 4) candidates.emplace_back(CoxType::F4, 4);
    if (n == 2) candidates.emplace_back(CoxType::G2, 2);
    if (n == 3) candidates.emplace_back(CoxType::H3, 3);
    if (n == 4) candidates.emplace_back(CoxType::H4, 4);
    if (n == 2 && bond[0].size() == 2) candidates.emplace_back(CoxType::I2, bond[0][1]);
    for (auto [t, p] : candidates) {
        CoxeterDiagram d = make_unchecked(t, p);
        if (d.bond == bond) {
            d.validate();
            return d;
        }
    }
    throw NonFiniteType("bond matrix matches no finite irreducible type in the standard labeling");
}

std::string CoxeterDiagram::name() const {
    std::ostringstream os;
    switch (type) {
    case CoxType::A: os << "A" << rank; break;
    case CoxType::B: os << "B" << rank; break;
    case CoxType::D: os << "D" << rank; break;
    case CoxType::E6: os << "E6"; break;
    case CoxType::E7: os << "E7"; break;
    case CoxType::E8: os << "E8"; break;
    case CoxType::F4: os << "F4"; break;
    case CoxType::G2: os << "G2"; break;
    case CoxType::H3: os << "H3"; break;
    case CoxType::H4: os << "H4"; break;
    case CoxType::I2: os << "I2(" << m_param << ")"; break;
    }
    return os.str();
}

std::string CoxeterDiagram::simple_label(int i) const {
    return "s" + std::to_string(i + label_base());
}

int CoxeterDiagram::num_positive_roots() const {
    switch (type) {
    case CoxType::A: return rank * (rank + 1) / 2;
    case CoxType::B: return rank * rank;
    case CoxType::D: return rank * (rank - 1);
    case CoxType::E6: return 36;
    case CoxType::E7: return 63;
    case CoxType::E8: return 120;
    case CoxType::F4: return 24;
    case CoxType::G2: return 6;
    case CoxType::H3: return 15;
    case CoxType::H4: return 60;
    case CoxType::I2: return m_param;
    }
    return 0;
}

bool CoxeterDiagram::simply_laced() const {
    for (int i = 0; i < rank; ++i)
        for (int j = i + 1; j < rank; ++j)
            if (bond[std::size_t(i)][std::size_t(j)] > 3) return false;
    return true;
}

bool CoxeterDiagram::crystallographic() const {
    for (int i = 0; i < rank; ++i)
        for (int j = i + 1; j < rank; ++j) {
            int m = bond[std::size_t(i)][std::size_t(j)];
            if (m != 2 && m != 3 && m != 4 && m != 6) return false;
        }
    return type != CoxType::H3 && type != CoxType::H4;
}

std::vector<std::pair<int, int>> CoxeterDiagram::edges() const {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < rank; ++i)
        for (int j = i + 1; j < rank; ++j)
            if (bond[std::size_t(i)][std::size_t(j)] >= 3) e.emplace_back(i, j);
    return e;
}

bool CoxeterDiagram::connected() const {
    if (rank == 0) return false;
    std::vector<bool> seen(std::size_t(rank), false);
    std::vector<int> stack{0};
    seen[0] = true;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int u = 0; u < rank; ++u)
            if (!seen[std::size_t(u)] && bond[std::size_t(v)][std::size_t(u)] >= 3) {
                seen[std::size_t(u)] = true;
                stack.push_back(u);
            }
    }
    for (bool b : seen)
        if (!b) return false;
    return true;
}

void CoxeterDiagram::validate() const {
    require(rank >= 1 && int(bond.size()) == rank, "diagram: bad rank");
    for (int i = 0; i < rank; ++i) {
        require(bond[std::size_t(i)][std::size_t(i)] == 1, "diagram: diagonal must be 1");
        for (int j = 0; j < rank; ++j) {
            if (i == j) continue;
            require(bond[std::size_t(i)][std::size_t(j)] >= 2, "diagram: off-diagonal must be >= 2");
            require(bond[std::size_t(i)][std::size_t(j)] == bond[std::size_t(j)][std::size_t(i)],
                    "diagram: bond must be symmetric");
        }
    }
    require(rank == 1 || connected(), "diagram: graph must be connected");
    // Cross-check the bond matrix against the classified shape.
    CoxeterDiagram fresh =
        make_unchecked(type, type == CoxType::I2 ? m_param : rank);
    require(fresh.bond == bond && fresh.rank == rank, "diagram: bond matrix does not match type tag");
}

// ---------------------------------------------------------------------------
// Root system construction

namespace {

// golden integer a + b*phi, phi^2 = phi + 1
struct Gold {
    std::int64_t a = 0, b = 0;
    friend Gold operator+(Gold x, Gold y) { return {x.a + y.a, x.b + y.b}; }
    friend Gold operator-(Gold x, Gold y) { return {x.a - y.a, x.b - y.b}; }
    friend Gold operator*(Gold x, Gold y) {
        return {x.a * y.a + x.b * y.b, x.a * y.b + x.b * y.a + x.b * y.b};
    }
    friend bool operator==(Gold x, Gold y) { return x.a == y.a && x.b == y.b; }
    friend bool operator<(Gold x, Gold y) { return std::tie(x.a, x.b) < std::tie(y.a, y.b); }
};

// Generic reflection closure over an exact coefficient ring.  cart[i][j]
// holds c_ij with s_i(v)_i = v_i - sum_j c_ij v_j.
template <class S>
void closure(const CoxeterDiagram& dia, const std::vector<std::vector<S>>& cart,
             RootSystem& rs, std::vector<std::vector<S>>& coords_out) {
    const int n = dia.rank;
    const int Nmax = dia.num_positive_roots();
    std::map<std::vector<S>, int> index;
    std::vector<std::vector<S>> roots;
    auto unit = []() {
        if constexpr (std::is_same_v<S, std::int64_t>) return std::int64_t{1};
        else return S{1, 0};
    };
    for (int i = 0; i < n; ++i) {
        std::vector<S> e(std::size_t(n), S{});
        e[std::size_t(i)] = unit();
        index[e] = i;
        roots.push_back(e);
    }
    auto reflect = [&](int i, const std::vector<S>& v) {
        std::vector<S> w = v;
        S acc{};
        for (int j = 0; j < n; ++j) acc = acc + cart[std::size_t(i)][std::size_t(j)] * v[std::size_t(j)];
        w[std::size_t(i)] = w[std::size_t(i)] - acc;
        return w;
    };
    // closure
    for (std::size_t head = 0; head < roots.size(); ++head) {
        for (int i = 0; i < n; ++i) {
            std::vector<S> img = reflect(i, roots[head]);
            bool negated = false;
            // negative of a positive root has all coords <= 0; detect the
            // simple flip case (only alpha_i maps negative).
            {
                std::vector<S> neg(std::size_t(n), S{});
                for (int j = 0; j < n; ++j) neg[std::size_t(j)] = S{} - img[std::size_t(j)];
                if (index.count(neg)) negated = true;
            }
            if (negated) continue;
            if (!index.count(img)) {
                if (int(roots.size()) >= Nmax) throw NonFiniteType("reflection closure exceeded bound");
                index[img] = int(roots.size());
                roots.push_back(img);
            }
        }
    }
    require(int(roots.size()) == Nmax, "closure found wrong number of positive roots");
    rs.N = Nmax;
    rs.simple_root.resize(std::size_t(n));
    for (int i = 0; i < n; ++i) rs.simple_root[std::size_t(i)] = i;
    rs.action.assign(std::size_t(n), std::vector<int>(std::size_t(Nmax), 0));
    for (int i = 0; i < n; ++i) {
        for (int r = 0; r < Nmax; ++r) {
            std::vector<S> img = reflect(i, roots[std::size_t(r)]);
            auto it = index.find(img);
            if (it != index.end()) {
                rs.action[std::size_t(i)][std::size_t(r)] = it->second + 1;
            } else {
                std::vector<S> neg(std::size_t(n), S{});
                for (int j = 0; j < n; ++j) neg[std::size_t(j)] = S{} - img[std::size_t(j)];
                auto it2 = index.find(neg);
                require(it2 != index.end() && it2->second == r && r == rs.simple_root[std::size_t(i)],
                        "reflection action is not a signed permutation");
                rs.action[std::size_t(i)][std::size_t(r)] = -(r + 1);
            }
        }
    }
    coords_out = std::move(roots);
}

} // namespace

RootSystem build_root_system(const CoxeterDiagram& dia) {
    dia.validate();
    RootSystem rs;
    rs.dia = dia;
    rs.n = dia.rank;
    const int n = dia.rank;

    if (dia.type == CoxType::I2) {
        // roots indexed 0..m-1 along the half circle; alpha_1 = 0, alpha_2 = m-1
        const int m = dia.m_param;
        rs.N = m;
        rs.simple_root = {0, m - 1};
        rs.action.assign(2, std::vector<int>(std::size_t(m), 0));
        for (int r = 0; r < m; ++r) {
            rs.action[0][std::size_t(r)] = (r == 0) ? -1 : (m - r) + 1;
            rs.action[1][std::size_t(r)] = (r == m - 1) ? -m : (m - 2 - r) + 1;
        }
        return rs;
    }

    if (dia.type == CoxType::H3 || dia.type == CoxType::H4) {
        std::vector<std::vector<Gold>> cart;
        cart.assign(std::size_t(n), std::vector<Gold>(std::size_t(n)));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                int m = dia.bond[std::size_t(i)][std::size_t(j)];
                if (i == j) cart[std::size_t(i)][std::size_t(j)] = Gold{2, 0};
                else if (m == 2) cart[std::size_t(i)][std::size_t(j)] = Gold{0, 0};
                else if (m == 3) cart[std::size_t(i)][std::size_t(j)] = Gold{-1, 0};
                else if (m == 5) cart[std::size_t(i)][std::size_t(j)] = Gold{0, -1};  // -phi
                else throw NonFiniteType("unsupported bond in H type");
            }
        std::vector<std::vector<Gold>> coords;
        closure<Gold>(dia, cart, rs, coords);
        rs.gold_coords.resize(coords.size());
        for (std::size_t r = 0; r < coords.size(); ++r)
            for (auto& g : coords[r]) rs.gold_coords[r].emplace_back(g.a, g.b);
        return rs;
    }

    // crystallographic: integer Cartan coefficients
    std::vector<std::vector<std::int64_t>> cart;
    cart.assign(std::size_t(n), std::vector<std::int64_t>(std::size_t(n)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            int m = dia.bond[std::size_t(i)][std::size_t(j)];
            if (i == j) cart[std::size_t(i)][std::size_t(j)] = 2;
            else if (m == 2) cart[std::size_t(i)][std::size_t(j)] = 0;
            else if (m == 3) cart[std::size_t(i)][std::size_t(j)] = -1;
            else if (m == 4) cart[std::size_t(i)][std::size_t(j)] = (i < j) ? -2 : -1;
            else if (m == 6) cart[std::size_t(i)][std::size_t(j)] = (i < j) ? -3 : -1;
            else throw NonFiniteType("unsupported bond in crystallographic type");
        }
    std::vector<std::vector<std::int64_t>> coords;
    closure<std::int64_t>(dia, cart, rs, coords);
    rs.int_coords = std::move(coords);
    return rs;
}

namespace {
// p_0 = 0, p_1 = 1, p_{k+1} = x p_k - p_{k-1}: p_k = sin(k pi/m)/sin(pi/m)
// at x = 2cos(pi/m).  Exact coordinates of the dihedral roots.
std::string chebyshev_str(int k) {
    std::vector<std::int64_t> prev{0}, cur{1};
    for (int t = 1; t < k; ++t) {
        std::vector<std::int64_t> nxt(cur.size() + 1, 0);
        for (std::size_t i = 0; i < cur.size(); ++i) nxt[i + 1] += cur[i];
        for (std::size_t i = 0; i < prev.size(); ++i) nxt[i] -= prev[i];
        prev = std::move(cur);
        cur = std::move(nxt);
        while (!cur.empty() && cur.back() == 0) cur.pop_back();
    }
    if (k == 0 || cur.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = cur.size(); i-- > 0;) {
        if (cur[i] == 0) continue;
        if (!first && cur[i] > 0) os << "+";
        if (cur[i] == -1 && i > 0) os << "-";
        else if (cur[i] != 1 || i == 0) os << cur[i];
        if (i == 1) os << "x";
        else if (i > 1) os << "x^" << i;
        first = false;
    }
    return os.str();
}
} // namespace

std::string RootSystem::root_repr(int r) const {
    std::ostringstream os;
    if (dia.type == CoxType::I2) {
        // beta_j = p_{m-1-j} alpha_1 + p_j alpha_2 over x = 2cos(pi/m)
        os << "(" << chebyshev_str(dia.m_param - 1 - r) << "," << chebyshev_str(r) << ")";
        return os.str();
    }
    if (!int_coords.empty()) {
        os << "(";
        for (int j = 0; j < n; ++j) os << (j ? "," : "") << int_coords[std::size_t(r)][std::size_t(j)];
        os << ")";
    } else if (!gold_coords.empty()) {
        os << "(";
        for (int j = 0; j < n; ++j) {
            auto [a, b] = gold_coords[std::size_t(r)][std::size_t(j)];
            if (j) os << ",";
            os << a;
            if (b) os << (b > 0 ? "+" : "") << b << "phi";
        }
        os << ")";
    } else {
        os << "beta" << r;
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// CoxGroup

CoxGroup::CoxGroup(CoxeterDiagram d) : dia_(std::move(d)), rs_(build_root_system(dia_)) {
    // longest element by greedy ascent
    Elt w = identity();
    bool moved = true;
    while (moved) {
        moved = false;
        for (int i = 0; i < rs_.n; ++i)
            if (!is_right_descent(w, i)) {
                w = mult_right(w, i);
                moved = true;
                break;
            }
    }
    w0_ = w;
}

Elt CoxGroup::identity() const {
    Elt e;
    e.act.resize(std::size_t(rs_.N));
    for (int r = 0; r < rs_.N; ++r) e.act[std::size_t(r)] = std::int16_t(r + 1);
    return e;
}

Elt CoxGroup::mult_right(const Elt& w, int i) const {
    Elt out;
    out.act.resize(std::size_t(rs_.N));
    int ri = rs_.simple_root[std::size_t(i)];
    const auto& tab = rs_.action[std::size_t(i)];
    for (int r = 0; r < rs_.N; ++r) {
        if (r == ri) {
            out.act[std::size_t(r)] = std::int16_t(-w.act[std::size_t(r)]);
        } else {
            int q = tab[std::size_t(r)] - 1;
            out.act[std::size_t(r)] = w.act[std::size_t(q)];
        }
    }
    return out;
}

Elt CoxGroup::mult_left(int i, const Elt& w) const {
    Elt out;
    out.act.resize(std::size_t(rs_.N));
    const auto& tab = rs_.action[std::size_t(i)];
    for (int r = 0; r < rs_.N; ++r) {
        int s = w.act[std::size_t(r)];
        int b = (s > 0 ? s : -s) - 1;
        int img = tab[std::size_t(b)];
        out.act[std::size_t(r)] = std::int16_t(s > 0 ? img : -img);
    }
    return out;
}

Elt CoxGroup::mult(const Elt& a, const Elt& b) const {
    Elt out;
    out.act.resize(std::size_t(rs_.N));
    for (int r = 0; r < rs_.N; ++r) {
        int s = b.act[std::size_t(r)];
        int q = (s > 0 ? s : -s) - 1;
        int img = a.act[std::size_t(q)];
        out.act[std::size_t(r)] = std::int16_t(s > 0 ? img : -img);
    }
    return out;
}

Elt CoxGroup::inverse(const Elt& w) const {
    Elt out;
    out.act.resize(std::size_t(rs_.N));
    for (int r = 0; r < rs_.N; ++r) {
        int s = w.act[std::size_t(r)];
        if (s > 0) out.act[std::size_t(s - 1)] = std::int16_t(r + 1);
        else out.act[std::size_t(-s - 1)] = std::int16_t(-(r + 1));
    }
    return out;
}

Elt CoxGroup::from_word(const std::vector<int>& word) const {
    Elt w = identity();
    for (int i : word) w = mult_right(w, i);
    return w;
}

bool CoxGroup::is_right_descent(const Elt& w, int i) const {
    return w.act[std::size_t(rs_.simple_root[std::size_t(i)])] < 0;
}

bool CoxGroup::is_left_descent(const Elt& w, int i) const {
    // alpha_i in inv(w) iff w^{-1}(alpha_i) < 0 iff some act[a] = -(r_i+1)
    int target = -(rs_.simple_root[std::size_t(i)] + 1);
    for (int r = 0; r < rs_.N; ++r)
        if (w.act[std::size_t(r)] == target) return true;
    return false;
}

std::vector<int> CoxGroup::descents(const Elt& w) const {
    std::vector<int> out;
    for (int i = 0; i < rs_.n; ++i)
        if (is_right_descent(w, i)) out.push_back(i);
    return out;
}

Bitset CoxGroup::left_inversions(const Elt& w) const {
    Bitset b(std::size_t(rs_.N));
    for (int r = 0; r < rs_.N; ++r) {
        int s = w.act[std::size_t(r)];
        if (s < 0) b.set(std::size_t(-s - 1));
    }
    return b;
}

int CoxGroup::length(const Elt& w) const {
    int c = 0;
    for (int r = 0; r < rs_.N; ++r)
        if (w.act[std::size_t(r)] < 0) ++c;
    return c;
}

bool CoxGroup::leq_weak(const Elt& u, const Elt& v) const {
    return left_inversions(u).subset_of(left_inversions(v));
}

std::vector<int> CoxGroup::word(const Elt& w) const {
    std::vector<int> out;
    Elt cur = w;
    while (true) {
        int d = -1;
        for (int i = 0; i < rs_.n; ++i)
            if (is_right_descent(cur, i)) { d = i; break; }
        if (d < 0) break;
        out.push_back(d);
        cur = mult_right(cur, d);
    }
    std::reverse(out.begin(), out.end());
    return out;
}

std::vector<int> CoxGroup::support(const Elt& w) const {
    std::vector<int> ws = word(w);
    std::vector<bool> seen(std::size_t(rs_.n), false);
    for (int i : ws) seen[std::size_t(i)] = true;
    std::vector<int> out;
    for (int i = 0; i < rs_.n; ++i)
        if (seen[std::size_t(i)]) out.push_back(i);
    return out;
}

Elt CoxGroup::longest(const std::vector<int>& J) const {
    Elt w = identity();
    bool moved = true;
    while (moved) {
        moved = false;
        for (int i : J)
            if (!is_right_descent(w, i)) {
                w = mult_right(w, i);
                moved = true;
                break;
            }
    }
    return w;
}

int CoxGroup::psi(int i) const {
    int ri = rs_.simple_root[std::size_t(i)];
    int img = w0_.act[std::size_t(ri)];
    require(img < 0, "w0 must send every simple root negative");
    int r = -img - 1;
    for (int j = 0; j < rs_.n; ++j)
        if (rs_.simple_root[std::size_t(j)] == r) return j;
    throw Error("psi image is not a simple root");
}

int CoxGroup::order(const Elt& w) const {
    Elt e = identity();
    Elt cur = w;
    int k = 1;
    while (!(cur == e)) {
        cur = mult(cur, w);
        ++k;
        require(k <= 1000, "order: runaway");
    }
    return k;
}

std::vector<Elt> CoxGroup::all_elements(std::size_t cap) const {
    std::vector<Elt> elems;
    std::unordered_map<Bitset, int, BitsetHash> seen;
    elems.push_back(identity());
    seen.emplace(left_inversions(elems[0]), 0);
    for (std::size_t head = 0; head < elems.size(); ++head) {
        Elt w = elems[head];
        for (int i = 0; i < rs_.n; ++i) {
            if (is_right_descent(w, i)) continue;
            Elt nxt = mult_right(w, i);
            Bitset key = left_inversions(nxt);
            if (!seen.count(key)) {
                if (elems.size() >= cap) throw GroupTooLarge();
                seen.emplace(std::move(key), int(elems.size()));
                elems.push_back(std::move(nxt));
            }
        }
    }
    return elems;
}

} // namespace cambpop

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cambpop/bitset.hpp"
#include "cambpop/errors.hpp"

namespace cambpop {

enum class CoxType { A, B, D, E6, E7, E8, F4, G2, H3, H4, I2 };

// Finite irreducible Coxeter diagram.  Internal simple indices are always
// 0..rank-1; display labels follow the usual conventions (type A and B use
// s_1..s_n, type D uses s_0..s_{n-1} with the fork at s_2, E/F/G use
// Bourbaki numbering).
struct CoxeterDiagram {
    CoxType type;
    int rank = 0;
    int m_param = 0;                     // I2(m) only
    std::vector<std::vector<int>> bond;  // m(s_i,s_j); 1 on the diagonal

    static CoxeterDiagram make(CoxType t, int rank_or_m);
    static CoxeterDiagram parse(const std::string& name);  // "A4", "I2:7", ...
    // classify an explicit bond matrix; NonFiniteType when it matches no tag
    static CoxeterDiagram from_bond(const std::vector<std::vector<int>>& bond);

    std::string name() const;
    std::string simple_label(int i) const;  // "s1", "s0", ...
    int label_base() const { return type == CoxType::D ? 0 : 1; }

    int num_positive_roots() const;  // N
    int coxeter_number() const { return 2 * num_positive_roots() / rank; }
    bool simply_laced() const;
    bool crystallographic() const;

    std::vector<std::pair<int, int>> edges() const;  // bond >= 3
    bool connected() const;
    void validate() const;  // bond symmetric, matches the classification
};

// Positive roots with exact per-family arithmetic.  The element code only
// ever consumes `action`, so the three coefficient models (integer Cartan,
// golden integers for H, index arithmetic for I2) are interchangeable.
struct RootSystem {
    CoxeterDiagram dia;
    int n = 0;  // rank
    int N = 0;  // number of positive roots

    // action[i][r] = signed 1-based index of s_i(beta_r); negative only for
    // r = simple_root[i].
    std::vector<std::vector<int>> action;
    std::vector<int> simple_root;  // index of alpha_i

    // Exact coordinates in the simple-root basis.  Crystallographic types
    // fill int_coords; H3/H4 fill gold_coords (pairs a+b*phi); I2(m) fills
    // neither (the root is its index).
    std::vector<std::vector<std::int64_t>> int_coords;
    std::vector<std::vector<std::pair<std::int64_t, std::int64_t>>> gold_coords;

    std::string root_repr(int r) const;  // human-readable coordinates
};

RootSystem build_root_system(const CoxeterDiagram& dia);

// Group element as the signed permutation induced on positive roots:
// act[r] = signed 1-based index of w(beta_r).
struct Elt {
    std::vector<std::int16_t> act;

    friend bool operator==(const Elt& a, const Elt& b) { return a.act == b.act; }
    friend bool operator!=(const Elt& a, const Elt& b) { return !(a == b); }
};

class CoxGroup {
public:
    explicit CoxGroup(CoxeterDiagram d);

    const CoxeterDiagram& diagram() const { return dia_; }
    const RootSystem& roots() const { return rs_; }
    int rank() const { return rs_.n; }
    int num_roots() const { return rs_.N; }
    int coxeter_number() const { return 2 * rs_.N / rs_.n; }

    Elt identity() const;
    Elt mult_right(const Elt& w, int i) const;  // w * s_i
    Elt mult_left(int i, const Elt& w) const;   // s_i * w
    Elt apply_simple(const Elt& w, int i, bool left) const {
        return left ? mult_left(i, w) : mult_right(w, i);
    }
    Elt mult(const Elt& a, const Elt& b) const;  // a * b
    Elt inverse(const Elt& w) const;
    Elt from_word(const std::vector<int>& word) const;

    bool is_right_descent(const Elt& w, int i) const;
    bool is_left_descent(const Elt& w, int i) const;
    std::vector<int> descents(const Elt& w) const;  // right descents, Des(w)
    Bitset left_inversions(const Elt& w) const;
    int length(const Elt& w) const;
    bool leq_weak(const Elt& u, const Elt& v) const;  // inv(u) subset inv(v)

    // Greedy reduced word: strip the smallest right descent repeatedly.
    std::vector<int> word(const Elt& w) const;

    std::vector<int> support(const Elt& w) const;  // letters of any reduced word

    Elt longest(const std::vector<int>& J) const;  // w_circ(J)
    const Elt& longest() const { return w0_; }

    int psi(int i) const;  // w0 s_i w0 as a simple index

    int order(const Elt& w) const;

    // All elements by BFS, cap-guarded; index 0 is the identity.
    std::vector<Elt> all_elements(std::size_t cap) const;

private:
    CoxeterDiagram dia_;
    RootSystem rs_;
    Elt w0_;
};

} // namespace cambpop

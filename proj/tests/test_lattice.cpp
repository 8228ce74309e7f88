#include "doctest.h"

#include <algorithm>

#include "cambpop/lattice.hpp"

using namespace cambpop;

namespace {

// Boolean lattice of subsets of [k], element = bitmask.
FiniteLattice boolean_lattice(int k) {
    int n = 1 << k;
    std::vector<std::pair<int, int>> covers;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < k; ++b)
            if (!(a >> b & 1)) covers.emplace_back(a, a | (1 << b));
    return FiniteLattice::from_covers(n, covers);
}

FiniteLattice chain(int n) {
    std::vector<std::pair<int, int>> covers;
    for (int i = 0; i + 1 < n; ++i) covers.emplace_back(i, i + 1);
    return FiniteLattice::from_covers(n, covers);
}

// The lattice of Example exam:dihedral: two chains a_1<...<a_{m-1} and
// a_m<...<a_{2m-2} between a bottom and a top.  Element ids: 0 = bottom,
// 1..2m-2 = a_i, 2m-1 = top.
FiniteLattice dihedral_lattice(int m) {
    std::vector<std::pair<int, int>> covers;
    covers.emplace_back(0, 1);
    covers.emplace_back(0, m);
    for (int i = 1; i + 1 <= m - 1; ++i) covers.emplace_back(i, i + 1);
    for (int i = m; i + 1 <= 2 * m - 2; ++i) covers.emplace_back(i, i + 1);
    covers.emplace_back(m - 1, 2 * m - 1);
    covers.emplace_back(2 * m - 2, 2 * m - 1);
    return FiniteLattice::from_covers(2 * m, covers);
}

} // namespace

TEST_CASE("meet and join basics") {
    FiniteLattice B = boolean_lattice(3);
    CHECK(B.bottom == 0);
    CHECK(B.top == 7);
    for (int x = 0; x < B.n; ++x) {
        CHECK(B.meet(x, B.bottom) == B.bottom);
        CHECK(B.join(x, x) == x);
    }
    CHECK(B.meet(0b011, 0b110) == 0b010);
    CHECK(B.join(0b001, 0b100) == 0b101);
}

TEST_CASE("pop operators on the Boolean lattice") {
    FiniteLattice B = boolean_lattice(3);
    CHECK(B.pop_down(B.bottom) == B.bottom);
    for (int x = 0; x < B.n; ++x) CHECK(B.pop_down(x) == B.bottom);
    CHECK(B.pop_orbit(B.top) == std::vector<int>{7, 0});
    CHECK(check_pop_updown_identities(B));
}

TEST_CASE("shard labels of a Boolean lattice: j_{A,B} = {b}, Galois graph edgeless") {
    FiniteLattice B = boolean_lattice(4);
    ShardLabeling lab = shard_labeling(B);
    CHECK(lab.jirr.size() == 4);
    for (int x = 0; x < B.n; ++x)
        for (std::size_t k = 0; k < B.up[std::size_t(x)].size(); ++k) {
            int y = B.up[std::size_t(x)][k];
            CHECK(lab.label_up[std::size_t(x)][k] == (y ^ x));  // singleton subset
        }
    auto gal = galois_graph(B, lab);
    for (auto& out : gal) CHECK(out.empty());
    // unique facet = set of all atoms, so P(q) = q^4
    IntPoly p = facet_polynomial(B, lab);
    CHECK(p == IntPoly::q_pow(4));
    CHECK(B.is_boolean());
}

TEST_CASE("chain 0 < a < 1: kappa follows the defining identities") {
    FiniteLattice C = chain(3);
    ShardLabeling lab = shard_labeling(C);
    CHECK(lab.jirr == std::vector<int>{1, 2});
    CHECK(lab.mirr == std::vector<int>{0, 1});
    // kappa(j) /\ j = j_* and kappa(j) \/ j = kappa(j)^* force kappa(a) = 0
    // and kappa(1) = a, the m=2 instance of the dihedral rule.
    CHECK(lab.kappa_of[1] == 0);
    CHECK(lab.kappa_of[2] == 1);
    auto gal = galois_graph(C, lab);
    CHECK(gal.size() == 2);
    CHECK(C.is_distributive());
    CHECK(!C.is_boolean());
    // one-element lattice: P = 1
    FiniteLattice one = chain(1);
    CHECK(facet_polynomial(one, shard_labeling(one)) == IntPoly::one());
}

TEST_CASE("dihedral lattice: kappa(a_i) = a_{i-1} with a_0 = a_{2m-2}") {
    for (int m : {3, 5, 7}) {
        CAPTURE(m);
        FiniteLattice L = dihedral_lattice(m);
        ShardLabeling lab = shard_labeling(L);
        CHECK(lab.jirr.size() == std::size_t(2 * m - 2));
        for (int i = 1; i <= 2 * m - 2; ++i) {
            int expect = (i == 1) ? 2 * m - 2 : i - 1;
            CHECK(lab.kappa_of[std::size_t(i)] == expect);
        }
        // Galois arrows per Example exam:dihedral
        auto gal = galois_graph(L, lab);
        auto pos = [&](int elem) {
            return int(std::find(lab.jirr.begin(), lab.jirr.end(), elem) - lab.jirr.begin());
        };
        for (int i = 1; i <= 2 * m - 2; ++i)
            for (int ip = 1; ip <= 2 * m - 2; ++ip) {
                bool expect;
                if (i <= m - 1)
                    expect = (1 <= ip && ip <= i - 1) || (m + 1 <= ip && ip <= 2 * m - 2);
                else
                    expect = (2 <= ip && ip <= m - 1) || (m <= ip && ip <= i - 1);
                auto& out = gal[std::size_t(pos(i))];
                bool present = std::find(out.begin(), out.end(), pos(ip)) != out.end();
                CHECK(present == expect);
            }
        CHECK(check_pop_updown_identities(L));
    }
}

TEST_CASE("intervals") {
    FiniteLattice L = dihedral_lattice(3);  // hexagon = Weak(A2) shape
    CHECK(is_boolean_interval(L, 2, 2));
    CHECK(is_boolean_interval(L, 1, 2));  // a cover edge
    CHECK(!is_distributive_interval(L, L.bottom, L.top));
    CHECK_THROWS_AS(L.interval(2, 1), NotAnInterval);
    FiniteLattice B = boolean_lattice(3);
    CHECK(is_distributive_interval(B, 0, 7));
}

TEST_CASE("congruence closure") {
    FiniteLattice L = dihedral_lattice(3);  // 0, a1=1, a2=2, a3=3, a4=4, top=5
    SUBCASE("empty generators give the discrete congruence") {
        Congruence c = congruence_closure(L, {});
        CHECK(c.num_classes == L.n);
        for (int x = 0; x < L.n; ++x) CHECK(quotient_pop(L, c, x) == L.pop_down(x));
    }
    SUBCASE("collapsing bottom and top gives one class") {
        Congruence c = congruence_closure(L, {{L.bottom, L.top}});
        CHECK(c.num_classes == 1);
        CHECK(quotient_pop(L, c, L.bottom) == L.bottom);
    }
    SUBCASE("Cambrian-shaped congruence of the hexagon") {
        // classes {0},{a1},{a3,a4},{a2},{top}: generated by a3 = a4
        Congruence c = congruence_closure(L, {{3, 4}});
        CHECK(c.num_classes == 5);
        CHECK(c.class_of[3] == c.class_of[4]);
        CHECK(c.pi_down(4) == 3);
        CHECK(quotient_pop(L, c, L.top) == L.bottom);
        CHECK_THROWS_AS(quotient_pop(L, c, 4), NotAQuotientRepresentative);
        QuotientLattice Q = quotient_lattice(L, c);
        CHECK(Q.lat.n == 5);
        CHECK(check_pop_updown_identities(Q.lat));
    }
}

TEST_CASE("facet polynomial equals that of the dual lattice") {
    for (int m : {3, 4, 6}) {
        FiniteLattice L = dihedral_lattice(m);
        FiniteLattice D = L.dual();
        CHECK(facet_polynomial(L, shard_labeling(L)) == facet_polynomial(D, shard_labeling(D)));
    }
}

TEST_CASE("orbit statistics") {
    FiniteLattice L = dihedral_lattice(5);  // weak order I2(5), h = 5
    auto st = L.orbit_stats();
    CHECK(st.max_size == 5);
    CHECK(L.pop_orbit(L.bottom) == std::vector<int>{L.bottom});
}

TEST_CASE("non-semidistributive input raises") {
    // M3: bottom, three atoms, top
    std::vector<std::pair<int, int>> covers{{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 4}, {3, 4}};
    FiniteLattice M3 = FiniteLattice::from_covers(5, covers);
    CHECK_THROWS_AS(shard_labeling(M3), NotSemidistributive);
}

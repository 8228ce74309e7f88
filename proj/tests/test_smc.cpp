#include "doctest.h"

#include <algorithm>
#include <set>

#include "cambpop/smc.hpp"

using namespace cambpop;

namespace {

int root_index(const CoxGroup& W, const std::vector<std::int64_t>& coords) {
    for (int r = 0; r < W.num_roots(); ++r)
        if (W.roots().int_coords[std::size_t(r)] == coords) return r;
    return -1;
}

std::vector<std::vector<int>> subsets(const std::vector<int>& v) {
    std::vector<std::vector<int>> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << v.size()); ++mask) {
        std::vector<int> s;
        for (std::size_t k = 0; k < v.size(); ++k)
            if (mask >> k & 1) s.push_back(v[k]);
        out.push_back(s);
    }
    return out;
}

} // namespace

TEST_CASE("semibrick pairs and 2-term collections in A2") {
    CoxGroup W(CoxeterDiagram::parse("A2"));
    RepCat cat(W, make_coxeter_element(W.diagram(), {0, 1}));
    int s1 = root_index(W, {1, 0}), s2 = root_index(W, {0, 1}), p1 = root_index(W, {1, 1});
    SemibrickPair zero{{}, {s1, s2}};
    SemibrickPair full{{s1, s2}, {}};
    CHECK(is_smc(cat, zero));
    CHECK(is_smc(cat, full));
    // SMC attached to Filt(S(1)) is ({S1}, {P1}); to Gen(P(1)) it is
    // ({P1}, {S2})
    CHECK(is_smc(cat, SemibrickPair{{s1}, {p1}}));
    CHECK(is_smc(cat, SemibrickPair{{p1}, {s2}}));
    // ({S1},{S2}) fails the Ext-orthogonality requirement here
    CHECK(!is_semibrick_pair(cat, SemibrickPair{{s1}, {s2}}));
    TorsLattice tl = build_tors_lattice(cat);
    Bitset ts1{3};
    ts1.set(std::size_t(s1));
    CHECK(smc_of_torsion(tl, tl.index_of(ts1)) == SemibrickPair{{s1}, {p1}});
    for (int x = 0; x < tl.lat.n; ++x) CHECK(is_smc(cat, smc_of_torsion(tl, x)));
}

TEST_CASE("minimal approximations") {
    CoxGroup W(CoxeterDiagram::parse("A2"));
    RepCat cat(W, make_coxeter_element(W.diagram(), {0, 1}));
    int s1 = root_index(W, {1, 0}), s2 = root_index(W, {0, 1}), p1 = root_index(W, {1, 1});
    (void)s1;
    SUBCASE("empty subcategory gives the zero approximation") {
        RightApprox ap = minimal_right_approx(cat, {}, cat.indec(p1));
        CHECK(ap.source.is_zero());
        CHECK(map_injective(ap.g));
        LeftApprox lap = minimal_left_approx(cat, cat.indec(p1), {});
        CHECK(lap.target.is_zero());
        CHECK(map_surjective(lap.target, lap.g));
    }
    SUBCASE("an object of the subcategory approximates itself isomorphically") {
        RightApprox ap = minimal_right_approx(cat, {s2}, cat.indec(s2));
        CHECK(ap.mult == std::vector<int>{1});
        CHECK(map_injective(ap.g));
        CHECK(map_surjective(cat.indec(s2), ap.g));
    }
    SUBCASE("minimal right Filt(S2)-approximation of P(1) is the socle inclusion") {
        RightApprox ap = minimal_right_approx(cat, {s2}, cat.indec(p1));
        CHECK(ap.mult == std::vector<int>{1});
        CHECK(map_injective(ap.g));
        CHECK(!map_surjective(cat.indec(p1), ap.g));
        Rep ck = coker_rep(cat.quiver(), ap.source, cat.indec(p1), ap.g, nullptr);
        CHECK(cat.decompose(ck)[std::size_t(root_index(W, {1, 0}))] == 1);
    }
}

TEST_CASE("every 2-term collection is SM compatible (A2, A3)") {
    for (const char* name : {"A2", "A3"}) {
        CAPTURE(name);
        CoxGroup W(CoxeterDiagram::parse(name));
        for (const CoxeterElement& c : all_coxeter_elements(W.diagram())) {
            RepCat cat(W, c);
            TorsLattice tl = build_tors_lattice(cat);
            for (int x = 0; x < tl.lat.n; ++x) CHECK(is_sm_compatible(cat, smc_of_torsion(tl, x)));
        }
    }
}

TEST_CASE("mutation base cases in A2") {
    CoxGroup W(CoxeterDiagram::parse("A2"));
    RepCat cat(W, make_coxeter_element(W.diagram(), {0, 1}));
    int s1 = root_index(W, {1, 0}), s2 = root_index(W, {0, 1}), p1 = root_index(W, {1, 1});
    SemibrickPair p{{s1}, {p1}};  // SMC of Filt(S(1))
    SUBCASE("mu at the empty set is the identity") {
        CHECK(mutate_left(cat, p, {}).pair == p);
        CHECK(mutate_right(cat, p, {}).pair == p);
    }
    SUBCASE("mu_X of the SMC of Filt(S1) is the SMC of 0") {
        MutationResult r = mutate_left(cat, p, {s1});
        CHECK(r.pair == SemibrickPair{{}, {s1, s2}});
    }
    SUBCASE("witness provenance") {
        MutationResult r = mutate_left(cat, p, {s1});
        // P(1) maps onto S(1) with kernel S(2): the y-output S(2) is a
        // kernel, S(1) is carried over
        std::set<std::pair<int, BrickSource>> up(r.up_witness.begin(), r.up_witness.end());
        CHECK(up.count({s2, BrickSource::KerOfApprox}));
        CHECK(up.count({s1, BrickSource::CarriedOver}));
    }
}

TEST_CASE("pop equals mutation on tors (A2, A3)") {
    for (const char* name : {"A2", "A3"}) {
        CAPTURE(name);
        CoxGroup W(CoxeterDiagram::parse(name));
        for (const CoxeterElement& c : all_coxeter_elements(W.diagram())) {
            RepCat cat(W, c);
            TorsLattice tl = build_tors_lattice(cat);
            for (int x = 0; x < tl.lat.n; ++x) {
                CHECK(tl.index_of(pop_via_mutation_down(cat, tl, x)) == tl.lat.pop_down(x));
                CHECK(tl.index_of(pop_via_mutation_up(cat, tl, x)) == tl.lat.pop_up(x));
            }
        }
    }
}

TEST_CASE("subset mutations realize exactly the Ungar moves (A3)") {
    CoxGroup W(CoxeterDiagram::parse("A3"));
    for (const CoxeterElement& c : all_coxeter_elements(W.diagram())) {
        RepCat cat(W, c);
        TorsLattice tl = build_tors_lattice(cat);
        for (int x = 0; x < tl.lat.n; ++x) {
            SemibrickPair p = smc_of_torsion(tl, x);
            std::set<int> mutated, ungar;
            for (const std::vector<int>& xp : subsets(p.x)) {
                MutationResult r = mutate_left(cat, p, xp);
                Bitset d{std::size_t(cat.num_indec())};
                for (int b : r.pair.x) d.set(std::size_t(b));
                int target = tl.index_of(cat.t_closure(d));
                mutated.insert(target);
                // T(mu_{X'}) = T /\ perp(X')
                Bitset expect = tl.cls[std::size_t(x)];
                Bitset xpb{std::size_t(cat.num_indec())};
                for (int b : xp) xpb.set(std::size_t(b));
                expect &= cat.perp_left(xpb);
                CHECK(tl.cls[std::size_t(target)] == expect);
            }
            for (const std::vector<int>& covers : subsets(tl.lat.down[std::size_t(x)])) {
                int acc = x;
                for (int lo : covers) acc = tl.lat.meet(acc, lo);
                ungar.insert(acc);
            }
            CHECK(mutated == ungar);
        }
    }
}

TEST_CASE("single mutations are involutive across the cover (A3)") {
    CoxGroup W(CoxeterDiagram::parse("A3"));
    CoxeterElement c = linear_coxeter_element(W.diagram());
    RepCat cat(W, c);
    TorsLattice tl = build_tors_lattice(cat);
    for (int x = 0; x < tl.lat.n; ++x) {
        SemibrickPair p = smc_of_torsion(tl, x);
        for (int b : p.x) {
            MutationResult down = mutate_left(cat, p, {b});
            // mutating back at the same brick, now on the Y side
            MutationResult back = mutate_right(cat, down.pair, {b});
            CHECK(back.pair == p);
        }
    }
}

TEST_CASE("preimages under pop (A3, all Coxeter elements)") {
    CoxGroup W(CoxeterDiagram::parse("A3"));
    for (const CoxeterElement& c : all_coxeter_elements(W.diagram())) {
        RepCat cat(W, c);
        TorsLattice tl = build_tors_lattice(cat);
        // theorem conditions agree with brute force (asserted inside)
        for (int x = 0; x < tl.lat.n; ++x) preimage_set(cat, tl, x);
        // nothing pops to the top: pop strictly decreases everything above 0
        CHECK(preimage_set(cat, tl, tl.lat.top).empty());
        // the top is the unique preimage of its own image
        int below_top = tl.lat.pop_down(tl.lat.top);
        std::vector<int> pre = preimage_set(cat, tl, below_top);
        CHECK(std::find(pre.begin(), pre.end(), tl.lat.top) != pre.end());
        // preimages of the bottom: exactly the Serre classes
        std::vector<int> serre;
        for (int x = 0; x < tl.lat.n; ++x)
            if (detect_serre(cat, tl.cls[std::size_t(x)])) serre.push_back(x);
        CHECK(preimage_set(cat, tl, tl.lat.bottom) == serre);
    }
}

TEST_CASE("two-poppable characterization (A3)") {
    CoxGroup W(CoxeterDiagram::parse("A3"));
    for (const CoxeterElement& c : all_coxeter_elements(W.diagram())) {
        RepCat cat(W, c);
        TorsLattice tl = build_tors_lattice(cat);
        const RootSystem& rs = W.roots();
        std::vector<int> verts;
        for (int i = 0; i < W.rank(); ++i) verts.push_back(i);
        for (int x = 0; x < tl.lat.n; ++x)
            for (const std::vector<int>& s : subsets(verts)) {
                Bitset filt_s{std::size_t(cat.num_indec())};
                for (int v : s) filt_s.set(std::size_t(rs.simple_root[std::size_t(v)]));
                bool lhs = tl.cls[std::size_t(tl.lat.pop_down(x))] == filt_s;
                CHECK(lhs == two_poppable_conditions(cat, tl, x, s));
            }
        // consequence: 2-pop-sortable iff pop^2 = 0
        for (int x = 0; x < tl.lat.n; ++x) {
            bool two_sortable = tl.lat.pop_down(tl.lat.pop_down(x)) == tl.lat.bottom;
            bool by_conditions = false;
            for (const std::vector<int>& s : subsets(verts))
                if (two_poppable_conditions(cat, tl, x, s)) {
                    // the target Filt(S) must itself pop to 0, which is
                    // automatic for semisimple classes
                    by_conditions = true;
                }
            CHECK(two_sortable == by_conditions);
        }
    }
}

TEST_CASE("algebraic image characterization (A3, A4, D4)") {
  for (const char* name : {"A3", "A4", "D4"}) {
    CAPTURE(name);
    CoxGroup W(CoxeterDiagram::parse(name));
    for (const CoxeterElement& c : all_coxeter_elements(W.diagram())) {
        RepCat cat(W, c);
        TorsLattice tl = build_tors_lattice(cat);
        std::vector<int> proot = projective_root(cat);
        std::vector<bool> image(std::size_t(tl.lat.n), false);
        for (int x = 0; x < tl.lat.n; ++x) image[std::size_t(tl.lat.pop_down(x))] = true;
        for (int x = 0; x < tl.lat.n; ++x) {
            std::vector<int> d = tl.d_bricks(x);
            std::vector<int> u = tl.u_bricks(x);
            // (4): g_{U(T),X} surjective for all X in D(T)
            bool approx_surj = true;
            std::vector<int> wl;
            {
                Bitset ub{std::size_t(cat.num_indec())};
                for (int b : u) ub.set(std::size_t(b));
                wl = cat.filt_of_semibrick(ub).bits();
            }
            for (int xb : d) {
                RightApprox ap = minimal_right_approx(cat, wl, cat.indec(xb));
                if (!map_surjective(cat.indec(xb), ap.g)) approx_surj = false;
            }
            CHECK(approx_surj == image[std::size_t(x)]);
            // hereditary characterization: Ext-orthogonal D and no projective
            bool ext_orth = true;
            for (int a : d)
                for (int b : d)
                    if (cat.ext(a, b) != 0) ext_orth = false;
            bool has_proj = false;
            for (int i = 0; i < W.rank(); ++i)
                if (tl.cls[std::size_t(x)].test(std::size_t(proot[std::size_t(i)]))) has_proj = true;
            CHECK((ext_orth && !has_proj) == image[std::size_t(x)]);
            // no-projective lemma on its own
            if (has_proj) CHECK(!image[std::size_t(x)]);
            // Boolean-interval equivalence with Ext-orthogonality
            CHECK(ext_orth == is_boolean_interval(tl.lat, tl.lat.pop_down(x), x));
        }
    }
  }
}

TEST_CASE("mutation dimension identities (A2, A3)") {
    for (const char* name : {"A2", "A3"}) {
        CAPTURE(name);
        CoxGroup W(CoxeterDiagram::parse(name));
        for (const CoxeterElement& c : all_coxeter_elements(W.diagram())) {
            RepCat cat(W, c);
            TorsLattice tl = build_tors_lattice(cat);
            for (int x = 0; x < tl.lat.n; ++x) {
                SemibrickPair p = smc_of_torsion(tl, x);
                for (const std::vector<int>& xp : subsets(p.x)) {
                    MutationDimensionReport rep = mutation_dimension_checks(cat, p, xp);
                    CHECK(rep.hom_ext_bijection);
                    CHECK(rep.ext_vanishing);
                    CHECK(rep.hom_bijection);
                    CHECK(rep.ext_injection);
                }
            }
        }
    }
}

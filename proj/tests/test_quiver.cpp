#include "doctest.h"

#include <algorithm>
#include <random>
#include <set>

#include "cambpop/quiver.hpp"

using namespace cambpop;

namespace {

int root_index(const CoxGroup& W, const std::vector<std::int64_t>& coords) {
    for (int r = 0; r < W.num_roots(); ++r)
        if (W.roots().int_coords[std::size_t(r)] == coords) return r;
    return -1;
}

} // namespace

TEST_CASE("quiver construction") {
    CoxGroup A2(CoxeterDiagram::parse("A2"));
    Quiver q = Quiver::of_coxeter(A2.diagram(), make_coxeter_element(A2.diagram(), {0, 1}));
    REQUIRE(q.arrows.size() == 1);
    CHECK(q.arrows[0] == std::make_pair(0, 1));
    CHECK_THROWS_AS(Quiver::of_coxeter(CoxeterDiagram::parse("B3"),
                                       linear_coxeter_element(CoxeterDiagram::parse("B3"))),
                    NotSimplyLaced);
}

TEST_CASE("indecomposables realize the positive roots") {
    SUBCASE("A1") {
        CoxGroup W(CoxeterDiagram::parse("A1"));
        RepCat cat(W, linear_coxeter_element(W.diagram()));
        CHECK(cat.num_indec() == 1);
        CHECK(cat.indec(0).dim == std::vector<int>{1});
    }
    SUBCASE("A2 with arrow 1 -> 2") {
        CoxGroup W(CoxeterDiagram::parse("A2"));
        RepCat cat(W, make_coxeter_element(W.diagram(), {0, 1}));
        CHECK(cat.num_indec() == 3);
        int p1 = root_index(W, {1, 1});
        REQUIRE(p1 >= 0);
        const Rep& m = cat.indec(p1);
        CHECK(m.dim == std::vector<int>{1, 1});
        CHECK(!m.mat[0](0, 0).is_zero());  // the arrow map is an isomorphism
    }
    SUBCASE("counts for A3, A4, A5, D4, D5") {
        for (const char* name : {"A3", "A4", "A5", "D4", "D5"}) {
            CAPTURE(name);
            CoxGroup W(CoxeterDiagram::parse(name));
            for (const CoxeterElement& c : all_coxeter_elements(W.diagram())) {
                RepCat cat(W, c);
                CHECK(cat.num_indec() == W.num_roots());
                // brick and rigidity checks run inside the constructor
            }
        }
    }
}

TEST_CASE("hom and ext dimensions in A2") {
    CoxGroup W(CoxeterDiagram::parse("A2"));
    RepCat cat(W, make_coxeter_element(W.diagram(), {0, 1}));
    int s1 = root_index(W, {1, 0}), s2 = root_index(W, {0, 1}), p1 = root_index(W, {1, 1});
    CHECK(cat.hom(p1, s2) == 0);
    CHECK(cat.hom(s1, s2) == 0);
    CHECK(cat.ext(s1, s2) == 1);
    CHECK(cat.ext(s2, s1) == 0);
    CHECK(cat.hom(p1, s1) == 1);  // top
    CHECK(cat.hom(s2, p1) == 1);  // socle
    for (int r = 0; r < 3; ++r) CHECK(cat.hom(r, r) == 1);
}

TEST_CASE("extension middle terms") {
    CoxGroup W(CoxeterDiagram::parse("A3"));
    for (const CoxeterElement& c : all_coxeter_elements(W.diagram())) {
        RepCat cat(W, c);
        const Quiver& q = cat.quiver();
        for (int a = 0; a < cat.num_indec(); ++a)
            for (int b = 0; b < cat.num_indec(); ++b) {
                auto classes = ext_basis(q, cat.indec(a), cat.indec(b));
                CHECK(int(classes.size()) == cat.ext(a, b));
                for (const auto& psi : classes) {
                    RepMap incl, proj;
                    Rep e = middle_term(q, cat.indec(a), cat.indec(b), psi, &incl, &proj);
                    CHECK(is_morphism(q, cat.indec(b), e, incl));
                    CHECK(is_morphism(q, e, cat.indec(a), proj));
                    CHECK(map_injective(incl));
                    CHECK(map_surjective(cat.indec(a), proj));
                    // a nonzero class gives a non-split middle term
                    std::vector<int> mult = cat.decompose(e);
                    int pieces = 0;
                    for (int m : mult) pieces += m;
                    bool split = (pieces == 2 && mult[std::size_t(a)] >= 1 && mult[std::size_t(b)] >= 1);
                    CHECK(!split);
                }
            }
    }
}

TEST_CASE("decompose recovers direct sums") {
    CoxGroup W(CoxeterDiagram::parse("A3"));
    RepCat cat(W, linear_coxeter_element(W.diagram()));
    std::mt19937 rng(5);
    for (int rep = 0; rep < 20; ++rep) {
        std::vector<int> expect(std::size_t(cat.num_indec()), 0);
        std::vector<const Rep*> parts;
        for (int k = 0; k < 4; ++k) {
            int r = int(rng() % unsigned(cat.num_indec()));
            ++expect[std::size_t(r)];
            parts.push_back(&cat.indec(r));
        }
        Rep sum = direct_sum(cat.quiver(), parts);
        CHECK(cat.decompose(sum) == expect);
    }
    CHECK(cat.decompose(Rep::zero(cat.quiver())) == std::vector<int>(std::size_t(cat.num_indec()), 0));
}

TEST_CASE("socle") {
    CoxGroup W(CoxeterDiagram::parse("A2"));
    RepCat cat(W, make_coxeter_element(W.diagram(), {0, 1}));
    int p1 = root_index(W, {1, 1});
    Rep soc;
    Rep quot = socle_quotient(cat.quiver(), cat.indec(p1), &soc);
    CHECK(soc.dim == std::vector<int>{0, 1});   // soc(P(1)) = S(2)
    CHECK(quot.dim == std::vector<int>{1, 0});  // top S(1)
}

TEST_CASE("projective and injective roots in A2") {
    CoxGroup W(CoxeterDiagram::parse("A2"));
    RepCat cat(W, make_coxeter_element(W.diagram(), {0, 1}));
    std::vector<int> p = projective_root(cat);
    CHECK(p[0] == root_index(W, {1, 1}));
    CHECK(p[1] == root_index(W, {0, 1}));
    std::vector<int> inj = injective_root(cat);
    CHECK(inj[0] == root_index(W, {1, 0}));
    CHECK(inj[1] == root_index(W, {1, 1}));
}

TEST_CASE("torsion closures in A2") {
    CoxGroup W(CoxeterDiagram::parse("A2"));
    RepCat cat(W, make_coxeter_element(W.diagram(), {0, 1}));
    int s1 = root_index(W, {1, 0}), s2 = root_index(W, {0, 1}), p1 = root_index(W, {1, 1});
    auto bits = [&](std::vector<int> v) {
        Bitset b(3);
        for (int x : v) b.set(std::size_t(x));
        return b;
    };
    CHECK(cat.t_closure(bits({s1})) == bits({s1}));
    CHECK(cat.t_closure(bits({s2})) == bits({s2}));
    CHECK(cat.t_closure(bits({p1})) == bits({p1, s1}));  // Gen(P(1))
    CHECK(cat.t_closure(bits({})) == bits({}));
    CHECK(cat.t_closure(bits({s1, s2})) == bits({s1, s2, p1}));
    CHECK(cat.all_torsion_classes().size() == 5);
    CHECK(cat.filt_of_semibrick(bits({s1})) == bits({s1}));
    CHECK(cat.filt_of_semibrick(bits({s1, s2})) == bits({s1, s2, p1}));
}

TEST_CASE("phi_c maps the Cambrian lattice isomorphically onto tors") {
    for (const char* name : {"A2", "A3", "A4", "D4"}) {
        CAPTURE(name);
        CoxGroup W(CoxeterDiagram::parse(name));
        for (const CoxeterElement& c : all_coxeter_elements(W.diagram())) {
            RepCat cat(W, c);
            CambrianLattice camb = build_cambrian(W, c);
            std::vector<Bitset> tors = cat.all_torsion_classes();
            // image of phi equals the set of torsion classes
            std::set<std::vector<int>> tset, cset;
            for (const Bitset& t : tors) tset.insert(t.bits());
            for (int x = 0; x < camb.lat.n; ++x) {
                CHECK(cat.is_torsion_class(camb.inv[std::size_t(x)]));
                cset.insert(camb.inv[std::size_t(x)].bits());
            }
            CHECK(tset == cset);
            // lattice structure transported: covers and meets coincide
            TorsLattice tl = build_tors_lattice(cat);
            std::vector<int> to_tors(std::size_t(camb.lat.n), -1);
            for (int x = 0; x < camb.lat.n; ++x)
                to_tors[std::size_t(x)] = tl.index_of(camb.inv[std::size_t(x)]);
            for (int x = 0; x < camb.lat.n; ++x) {
                std::vector<int> a, b;
                for (int y : camb.lat.up[std::size_t(x)]) a.push_back(to_tors[std::size_t(y)]);
                b = tl.lat.up[std::size_t(to_tors[std::size_t(x)])];
                std::sort(a.begin(), a.end());
                std::sort(b.begin(), b.end());
                CHECK(a == b);
            }
            for (int x = 0; x < camb.lat.n; ++x)
                for (int y = 0; y < camb.lat.n; ++y) {
                    CHECK(to_tors[std::size_t(camb.lat.meet(x, y))] ==
                          tl.lat.meet(to_tors[std::size_t(x)], to_tors[std::size_t(y)]));
                    CHECK(to_tors[std::size_t(camb.lat.join(x, y))] ==
                          tl.lat.join(to_tors[std::size_t(x)], to_tors[std::size_t(y)]));
                }
        }
    }
}

TEST_CASE("brick labels: rep-theoretic covers match Cambrian shard labels") {
    for (const char* name : {"A2", "A3", "D4"}) {
        CAPTURE(name);
        CoxGroup W(CoxeterDiagram::parse(name));
        for (const CoxeterElement& c : all_coxeter_elements(W.diagram())) {
            RepCat cat(W, c);
            CambrianLattice camb = build_cambrian(W, c);
            ShardLabeling lab = shard_labeling(camb.lat);
            TorsLattice tl = build_tors_lattice(cat);
            for (int x = 0; x < camb.lat.n; ++x) {
                int tx = tl.index_of(camb.inv[std::size_t(x)]);
                // D via Cambrian shards: root added across each labeled edge
                std::vector<int> d_shard;
                for (int j : lab.canonical_join_rep(camb.lat, x)) {
                    Bitset diff = camb.inv[std::size_t(j)];
                    diff ^= camb.inv[std::size_t(camb.lat.down[std::size_t(j)][0])];
                    REQUIRE(diff.count() == 1);
                    d_shard.push_back(diff.bits()[0]);
                }
                std::sort(d_shard.begin(), d_shard.end());
                CHECK(d_shard == tl.d_bricks(tx));
                // |D| + |U| = n for the associated 2-term collection
                CHECK(int(tl.d_bricks(tx).size() + tl.u_bricks(tx).size()) == W.rank());
            }
        }
    }
}

TEST_CASE("Filt of a semibrick is wide") {
    CoxGroup W(CoxeterDiagram::parse("A3"));
    for (const CoxeterElement& c : all_coxeter_elements(W.diagram())) {
        RepCat cat(W, c);
        TorsLattice tl = build_tors_lattice(cat);
        for (int x = 0; x < tl.lat.n; ++x) {
            std::vector<int> d = tl.d_bricks(x);
            Bitset xb(std::size_t(cat.num_indec()));
            for (int r : d) xb.set(std::size_t(r));
            Bitset filt = cat.filt_of_semibrick(xb);
            CHECK(xb.subset_of(filt));
            // closed under extensions, kernels and cokernels of morphisms
            std::vector<int> members = filt.bits();
            for (int a : members)
                for (int b : members) {
                    for (const auto& psi : ext_basis(cat.quiver(), cat.indec(a), cat.indec(b))) {
                        Rep e = middle_term(cat.quiver(), cat.indec(a), cat.indec(b), psi,
                                            nullptr, nullptr);
                        std::vector<int> mult = cat.decompose(e);
                        for (int r = 0; r < cat.num_indec(); ++r)
                            if (mult[std::size_t(r)] > 0) CHECK(filt.test(std::size_t(r)));
                    }
                    for (const RepMap& f : hom_basis(cat.quiver(), cat.indec(a), cat.indec(b))) {
                        Rep k = kernel_rep(cat.quiver(), cat.indec(a), cat.indec(b), f, nullptr);
                        Rep co = coker_rep(cat.quiver(), cat.indec(a), cat.indec(b), f, nullptr);
                        for (const Rep* m : {&k, &co}) {
                            std::vector<int> mult = cat.decompose(*m);
                            for (int r = 0; r < cat.num_indec(); ++r)
                                if (mult[std::size_t(r)] > 0) CHECK(filt.test(std::size_t(r)));
                        }
                    }
                }
        }
    }
}

TEST_CASE("Serre and projective-generated detection") {
    CoxGroup W(CoxeterDiagram::parse("A2"));
    RepCat cat(W, make_coxeter_element(W.diagram(), {0, 1}));
    TorsLattice tl = build_tors_lattice(cat);
    int s1 = root_index(W, {1, 0}), s2 = root_index(W, {0, 1}), p1 = root_index(W, {1, 1});
    auto bits = [&](std::vector<int> v) {
        Bitset b(3);
        for (int x : v) b.set(std::size_t(x));
        return b;
    };
    CHECK(detect_serre(cat, bits({})));
    CHECK(detect_serre(cat, bits({s1, s2, p1})));
    CHECK(detect_serre(cat, bits({s1})));
    CHECK(detect_serre(cat, bits({s2})));
    CHECK(!detect_serre(cat, bits({p1, s1})));
    // Gen(P(1)) = {P(1), S(1)} is projective-generated at vertex 1
    auto gen = detect_projective_gen(cat, tl, bits({p1, s1}));
    REQUIRE(gen.has_value());
    CHECK(*gen == std::vector<int>{0});
    // Filt(S(1)) is not: Gen(P(1)) dominates it with the same simple content
    CHECK(!detect_projective_gen(cat, tl, bits({s1})).has_value());
    // 0 and mod are both Serre and projective-generated
    CHECK(detect_projective_gen(cat, tl, bits({})).has_value());
    CHECK(detect_projective_gen(cat, tl, bits({s1, s2, p1})).has_value());
}

TEST_CASE("one-poppable equivalences: pop to zero iff Serre iff simple D(T)") {
    for (const char* name : {"A2", "A3", "D4"}) {
        CAPTURE(name);
        CoxGroup W(CoxeterDiagram::parse(name));
        for (const CoxeterElement& c : all_coxeter_elements(W.diagram())) {
            RepCat cat(W, c);
            TorsLattice tl = build_tors_lattice(cat);
            for (int x = 0; x < tl.lat.n; ++x) {
                bool pop_zero = tl.lat.pop_down(x) == tl.lat.bottom;
                bool serre = detect_serre(cat, tl.cls[std::size_t(x)]);
                bool d_simple = true;
                for (int r : tl.d_bricks(x))
                    if (cat.indec(r).total_dim() != 1) d_simple = false;
                CHECK(pop_zero == serre);
                CHECK(pop_zero == d_simple);
            }
        }
    }
}

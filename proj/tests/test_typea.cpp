#include "doctest.h"

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <set>

#include "cambpop/arcs.hpp"
#include "cambpop/cambrian.hpp"
#include "cambpop/motzkin.hpp"
#include "cambpop/perm.hpp"

using namespace cambpop;

namespace {

// every arc on n+1 points (all above/below choices)
std::vector<Arc> all_arcs(int n) {
    std::vector<Arc> out;
    for (int i = 1; i <= n + 1; ++i)
        for (int j = i + 1; j <= n + 1; ++j) {
            int interior = j - i - 1;
            for (int mask = 0; mask < (1 << interior); ++mask) {
                Arc a;
                a.left = i;
                a.right = j;
                for (int t = 0; t < interior; ++t)
                    if (mask >> t & 1) a.above.push_back(i + 1 + t);
                out.push_back(a);
            }
        }
    return out;
}

long long count_noncrossing_diagrams(int n) {
    std::vector<Arc> arcs = all_arcs(n);
    std::vector<std::vector<bool>> comp(arcs.size(), std::vector<bool>(arcs.size(), false));
    for (std::size_t a = 0; a < arcs.size(); ++a)
        for (std::size_t b = a + 1; b < arcs.size(); ++b)
            comp[a][b] = comp[b][a] = arcs_compatible(arcs[a], arcs[b]);
    long long count = 0;
    std::vector<int> chosen;
    std::function<void(std::size_t)> rec = [&](std::size_t start) {
        ++count;
        for (std::size_t v = start; v < arcs.size(); ++v) {
            bool ok = true;
            for (int c : chosen)
                if (!comp[v][std::size_t(c)]) { ok = false; break; }
            if (!ok) continue;
            chosen.push_back(int(v));
            rec(v + 1);
            chosen.pop_back();
        }
    };
    rec(0);
    return count;
}

// Reading's pattern condition, with nu evaluated at the middle value
bool pattern_sortable(const NuMap& nu, const std::vector<int>& line) {
    int n1 = int(line.size());
    for (int j = 1; j + 1 <= n1; ++j)
        for (int i = 1; i <= n1; ++i) {
            if (!(line[std::size_t(j)] < line[std::size_t(i) - 1] &&
                  line[std::size_t(i) - 1] < line[std::size_t(j) - 1]))
                continue;
            int value = line[std::size_t(i) - 1];
            if (nu.a_at(value) && !(j < i)) return false;
            if (!nu.a_at(value) && !(i < j)) return false;
        }
    return true;
}

} // namespace

TEST_CASE("motzkin census") {
    long long motzkin_numbers[] = {1, 1, 2, 4, 9, 21, 51, 127, 323};
    for (int n = 0; n <= 8; ++n) {
        MotzkinCensus cen = motzkin_census(n);
        CHECK(cen.m_count == motzkin_numbers[n]);
    }
    CHECK(motzkin_census(0).mbar_count == 1);
    MotzkinCensus c3 = motzkin_census(3);
    CHECK(c3.mbar_count == 2);  // HHH and UHD
    std::vector<std::string> mb3 = all_mbar(3);
    std::sort(mb3.begin(), mb3.end());
    CHECK(mb3 == std::vector<std::string>{"HHH", "UHD"});
}

TEST_CASE("peak positions of a fixed Motzkin path") {
    std::string p = "UHHDHUDUHUDD";
    CHECK(is_motzkin(p));
    std::vector<std::pair<int, int>> peaks = motzkin_peaks(p);
    CHECK(peaks == std::vector<std::pair<int, int>>{{6, 1}, {10, 2}});
}

TEST_CASE("delta map") {
    SUBCASE("identity gives the empty diagram") {
        CHECK(delta_map({1, 2, 3, 4}).empty());
    }
    SUBCASE("21 gives the single arc 1->2") {
        ArcDiagram d = delta_map({2, 1});
        REQUIRE(d.size() == 1);
        CHECK(d[0].left == 1);
        CHECK(d[0].right == 2);
        CHECK(d[0].above.empty());
    }
    SUBCASE("325148679: recomputed arc set from the descent rule") {
        ArcDiagram d = delta_map({3, 2, 5, 1, 4, 8, 6, 7, 9});
        REQUIRE(d.size() == 3);  // descents at positions 1, 3, 6
        Arc a0{2, 3, {}};
        Arc a1{1, 5, {4}};   // below 2 and 3, above 4
        Arc a2{6, 8, {7}};   // above 7
        CHECK(d == ArcDiagram{a1, a0, a2});
        CHECK(is_noncrossing_diagram(d));
        // all arcs sortable for c = s1s2s4s8s3s5s7s6, so w is c-sortable
        CoxGroup W(CoxeterDiagram::parse("A8"));
        CoxeterElement c = make_coxeter_element(W.diagram(), {0, 1, 3, 7, 2, 4, 6, 5});
        NuMap nu = nu_of_coxeter(W.diagram(), c);
        std::vector<int> a_points, b_points;
        for (int i = 2; i <= 8; ++i) (nu.a_at(i) ? a_points : b_points).push_back(i);
        CHECK(a_points == std::vector<int>{4, 7, 8});
        CHECK(b_points == std::vector<int>{2, 3, 5, 6});
        for (const Arc& a : d) CHECK(arc_sortable(nu, a));
        CHECK(is_c_sortable(W, c, from_one_line(W, {3, 2, 5, 1, 4, 8, 6, 7, 9})));
    }
    SUBCASE("delta is a bijection onto noncrossing arc diagrams (n <= 6)") {
        for (int n : {2, 3, 4, 5, 6}) {
            CAPTURE(n);
            CoxGroup W(CoxeterDiagram::parse("A" + std::to_string(n)));
            std::set<ArcDiagram> images;
            for (const Elt& w : W.all_elements(6000)) {
                ArcDiagram d = delta_map(one_line(W, w));
                CHECK(is_noncrossing_diagram(d));
                CHECK(d.size() == W.descents(w).size());
                images.insert(d);
            }
            CHECK(images.size() == W.all_elements(6000).size());  // injective
            CHECK(count_noncrossing_diagrams(n) == (long long)images.size());
        }
    }
}

TEST_CASE("nu maps and Coxeter elements") {
    CoxeterDiagram A4 = CoxeterDiagram::parse("A4");
    SUBCASE("bipartite nu matches the bipartite Coxeter element") {
        NuMap nu = nu_of_coxeter(A4, bipartite_coxeter_element(A4));
        for (int i = 2; i <= 4; ++i) CHECK(nu.a_at(i) == (i % 2 == 1));
        NuMap direct = bipartite_nu(4);
        CHECK(nu.is_a == direct.is_a);
    }
    SUBCASE("c -> nu_c is a bijection (round trip over all c)") {
        std::set<std::vector<bool>> seen;
        for (const CoxeterElement& c : all_coxeter_elements(A4)) {
            NuMap nu = nu_of_coxeter(A4, c);
            seen.insert(nu.is_a);
            CHECK(coxeter_of_nu(A4, nu).word == c.word);
        }
        CHECK(seen.size() == 8);  // 2^{n-1}
    }
    SUBCASE("linear c has nu == B everywhere") {
        NuMap nu = nu_of_coxeter(A4, linear_coxeter_element(A4));
        for (int i = 2; i <= 4; ++i) CHECK(!nu.a_at(i));
    }
}

TEST_CASE("arc-level sortability matches the group-level test") {
    for (int n : {3, 4}) {
        CoxGroup W(CoxeterDiagram::parse("A" + std::to_string(n)));
        for (const CoxeterElement& c : all_coxeter_elements(W.diagram())) {
            NuMap nu = nu_of_coxeter(W.diagram(), c);
            for (const Elt& w : W.all_elements(200)) {
                ArcDiagram d = delta_map(one_line(W, w));
                bool arcs_ok = true;
                for (const Arc& a : d)
                    if (!arc_sortable(nu, a)) arcs_ok = false;
                bool group = is_c_sortable(W, c, w);
                CHECK(arcs_ok == group);
                CHECK(pattern_sortable(nu, one_line(W, w)) == group);
            }
        }
    }
}

TEST_CASE("maximal diagrams") {
    SUBCASE("n = 1: single facet of size 1") {
        std::vector<ArcDiagram> mad = maximal_diagrams(bipartite_nu(1));
        REQUIRE(mad.size() == 1);
        CHECK(mad[0].size() == 1);
    }
    SUBCASE("n = 2 bipartite: facet sizes 1 and 2, giving q + q^2") {
        std::vector<ArcDiagram> mad = maximal_diagrams(bipartite_nu(2));
        IntPoly p;
        for (const ArcDiagram& d : mad) p += IntPoly::q_pow(int(d.size()));
        CHECK(p == IntPoly({0, 1, 1}));
    }
    SUBCASE("facet generating function equals the Cambrian facet polynomial") {
        for (int n : {2, 3, 4, 5}) {
            CAPTURE(n);
            CoxGroup W(CoxeterDiagram::parse("A" + std::to_string(n)));
            for (const CoxeterElement& c : all_coxeter_elements(W.diagram())) {
                NuMap nu = nu_of_coxeter(W.diagram(), c);
                IntPoly from_arcs;
                for (const ArcDiagram& d : maximal_diagrams(nu))
                    from_arcs += IntPoly::q_pow(int(d.size()));
                CambrianLattice camb = build_cambrian(W, c);
                IntPoly from_lat = facet_polynomial(camb.lat, shard_labeling(camb.lat));
                CHECK(from_arcs == from_lat);
            }
        }
    }
}

TEST_CASE("psi bijection") {
    SUBCASE("n = 1: the unique facet maps to HH") {
        std::vector<ArcDiagram> mad = maximal_diagrams(bipartite_nu(1));
        CHECK(psi_map(1, mad[0]) == "HH");
        CHECK(psi_inverse(1, "HH") == mad[0]);
    }
    SUBCASE("round trips and the U-statistic for n <= 6") {
        for (int n = 1; n <= 6; ++n) {
            CAPTURE(n);
            std::vector<ArcDiagram> mad = maximal_diagrams(bipartite_nu(n));
            std::set<std::string> images;
            for (const ArcDiagram& d : mad) {
                std::string m = psi_map(n, d);
                CHECK(is_motzkin(m));
                CHECK(!has_height1_peak(m));
                CHECK(int(d.size()) == n - count_steps(m, 'U'));
                CHECK(psi_inverse(n, m) == d);
                images.insert(m);
            }
            CHECK(images.size() == mad.size());  // injective
            std::vector<std::string> mbar = all_mbar(n + 1);
            CHECK(images.size() == mbar.size());  // surjective
            for (const std::string& m : mbar) CHECK(psi_map(n, psi_inverse(n, m)) == m);
        }
    }
    SUBCASE("figure path UHUUDHDD round trip") {
        ArcDiagram d = psi_inverse(7, "UHUUDHDD");
        CHECK(psi_map(7, d) == "UHUUDHDD");
        CHECK(int(d.size()) == 7 - 3);
        CHECK(is_noncrossing_diagram(d));
    }
    SUBCASE("invalid paths raise") {
        CHECK_THROWS_AS(psi_inverse(1, "UD"), InvalidPath);    // height-1 peak
        CHECK_THROWS_AS(psi_inverse(2, "DUH"), InvalidPath);   // below axis
        CHECK_THROWS_AS(psi_inverse(3, "HUDH"), InvalidPath);  // height-1 peak
    }
}

TEST_CASE("generating function identity for small n") {
    for (int n = 1; n <= 5; ++n) {
        CAPTURE(n);
        NuMap nu = bipartite_nu(n);
        IntPoly from_arcs;
        for (const ArcDiagram& d : maximal_diagrams(nu)) from_arcs += IntPoly::q_pow(int(d.size()));
        CHECK(from_arcs == bipartite_facet_polynomial_series(n));
    }
}

TEST_CASE("choi-sun conditions") {
    SUBCASE("identity passes; double descents fail") {
        CHECK(choi_sun_check(3, {1, 2, 3, 4}));
        CHECK(!choi_sun_check(3, {4, 3, 2, 1}));
        CHECK(!choi_sun_check(3, {4, 3, 1, 2}));
    }
    SUBCASE("bullets expand exactly to inv(c^{-1}) avoidance plus no double descents") {
        for (int n = 2; n <= 7; ++n) {
            CAPTURE(n);
            CoxGroup W(CoxeterDiagram::parse("A" + std::to_string(n)));
            CoxeterElement cx = bipartite_coxeter_element(W.diagram());
            Elt cinv = W.from_word(cx.inverse().word);
            Bitset cinv_inv = W.left_inversions(cinv);
            std::vector<std::pair<int, int>> bad;
            cinv_inv.for_each([&](std::size_t r) { bad.push_back(root_transposition(W, int(r))); });
            // sample: everything for small n, random words otherwise
            std::vector<Elt> sample;
            if (n <= 4) {
                sample = W.all_elements(200);
            } else {
                sample.push_back(W.identity());
                sample.push_back(W.longest());
                std::mt19937 rng(99);
                for (int rep = 0; rep < 400; ++rep) {
                    Elt w = W.identity();
                    int len = int(rng() % 20);
                    for (int t = 0; t < len; ++t) w = W.mult_right(w, int(rng() % unsigned(n)));
                    sample.push_back(w);
                }
            }
            for (const Elt& w : sample) {
                std::vector<int> line = one_line(W, w);
                std::vector<int> pos(line.size() + 1);
                for (std::size_t t = 0; t < line.size(); ++t) pos[std::size_t(line[t])] = int(t) + 1;
                bool dd = false;
                for (std::size_t t = 0; t + 2 < line.size(); ++t)
                    if (line[t] > line[t + 1] && line[t + 1] > line[t + 2]) dd = true;
                bool inv_ok = true;
                for (auto [i, j] : bad)
                    if (pos[std::size_t(i)] > pos[std::size_t(j)]) inv_ok = false;
                CHECK(choi_sun_check(n, line) == (!dd && inv_ok));
            }
        }
    }
    SUBCASE("agreement with the brute-force image on A2..A6") {
        for (int n = 2; n <= 6; ++n) {
            CAPTURE(n);
            CoxGroup W(CoxeterDiagram::parse("A" + std::to_string(n)));
            CoxeterElement cx = bipartite_coxeter_element(W.diagram());
            CambrianLattice camb = build_cambrian(W, cx);
            std::vector<bool> img = brute_force_pop_image(camb);
            for (int x = 0; x < camb.lat.n; ++x)
                CHECK(choi_sun_check(n, one_line(W, camb.elem[std::size_t(x)])) == img[std::size_t(x)]);
        }
    }
}

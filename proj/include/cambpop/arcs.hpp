#pragma once

#include <string>
#include <vector>

#include "cambpop/coxelem.hpp"

namespace cambpop {

// Arc on the points 1..n+1 from `left` to `right`, passing above the
// interior points listed in `above` and below the rest.
struct Arc {
    int left = 0, right = 0;
    std::vector<int> above;  // sorted, subset of (left, right)

    bool passes_above(int k) const;
    friend bool operator==(const Arc& a, const Arc& b) {
        return a.left == b.left && a.right == b.right && a.above == b.above;
    }
    friend bool operator<(const Arc& a, const Arc& b) {
        if (a.left != b.left) return a.left < b.left;
        if (a.right != b.right) return a.right < b.right;
        return a.above < b.above;
    }
};

using ArcDiagram = std::vector<Arc>;  // kept sorted

// Vertical order comparison discretized at shared abscissae: the arcs cross
// iff their relative order swaps (an endpoint counts as sitting on the
// axis, between above and below).
bool arcs_cross(const Arc& a, const Arc& b);
// compatible = distinct endpoints on both sides and noncrossing
bool arcs_compatible(const Arc& a, const Arc& b);
bool is_noncrossing_diagram(const ArcDiagram& d);

// nu_c: {2..n} -> {A, B}; values stored as bools (true = A).
struct NuMap {
    int n = 0;
    std::vector<bool> is_a;  // index i-2 for point i in 2..n

    bool a_at(int i) const { return is_a[std::size_t(i) - 2]; }
};

NuMap nu_of_coxeter(const CoxeterDiagram& dia, const CoxeterElement& c);
NuMap bipartite_nu(int n);  // A at odd points
CoxeterElement coxeter_of_nu(const CoxeterDiagram& dia, const NuMap& nu);

bool arc_sortable(const NuMap& nu, const Arc& a);
Arc sortable_arc(const NuMap& nu, int i, int j);  // the unique one from i to j

// Delta: permutations (one-line, values 1..n+1) -> noncrossing arc diagrams,
// one arc per descent.
ArcDiagram delta_map(const std::vector<int>& line);

// Facets of the complex of c-sortable noncrossing arc diagrams.
std::vector<ArcDiagram> maximal_diagrams(const NuMap& nu);

// Psi: maximal bipartite diagrams -> Motzkin paths of length n+1 without
// height-1 peaks, and its step-by-step inverse.
std::string psi_map(int n, const ArcDiagram& d);
ArcDiagram psi_inverse(int n, const std::string& path);

// Choi-Sun membership test for the image of pop on Camb_{c^x}; w in one-line
// notation, n >= 2.
bool choi_sun_check(int n, const std::vector<int>& line);

std::string diagram_str(const ArcDiagram& d);

} // namespace cambpop

#pragma once

#include <string>
#include <vector>

#include "cambpop/poly.hpp"

namespace cambpop {

// Motzkin paths as words over U/D/H.
bool is_motzkin(const std::string& path);
bool has_height1_peak(const std::string& path);
std::vector<std::pair<int, int>> motzkin_peaks(const std::string& path);
int count_steps(const std::string& path, char step);

std::vector<std::string> all_motzkin(int n);
std::vector<std::string> all_mbar(int n);  // no peaks of height 1

// Truncated series of M(q,z) and Mbar(q,z) via their functional equations
// M - 1 = qz^2 M^2 + zM and Mbar - 1 = qz^2 (M-1) Mbar + z Mbar.
QSeries motzkin_series(int order);
QSeries mbar_series(int order);

// z^n coefficient of (1/qz)(Mbar(1/q, qz) - 1) - 1: the predicted facet
// polynomial of the bipartite type-A Cambrian lattice.
IntPoly bipartite_facet_polynomial_series(int n);

struct MotzkinCensus {
    long long m_count = 0;
    long long mbar_count = 0;
    IntPoly m_by_up;     // sum over M_n of q^{#U}
    IntPoly mbar_by_up;  // sum over Mbar_n of q^{#U}
};
MotzkinCensus motzkin_census(int n);

} // namespace cambpop

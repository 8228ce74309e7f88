#pragma once

#include <string>
#include <vector>

#include "cambpop/coxeter.hpp"

namespace cambpop {

// One-line permutation codec for type A_n (words on n+1 values).  Right
// multiplication by s_i swaps positions i, i+1 of the one-line word.

std::vector<int> one_line(const CoxGroup& W, const Elt& w);
Elt from_one_line(const CoxGroup& W, const std::vector<int>& line);

std::string one_line_str(const CoxGroup& W, const Elt& w);
std::vector<int> parse_one_line(const std::string& s);  // "52341" or "5,2,3,4,1"

// Root index <-> transposition (i j), 1 <= i < j <= n+1, in type A.
std::pair<int, int> root_transposition(const CoxGroup& W, int root_index);

} // namespace cambpop

#include "cambpop/perm.hpp"

#include <algorithm>
#include <sstream>

namespace cambpop {

std::vector<int> one_line(const CoxGroup& W, const Elt& w) {
    require(W.diagram().type == CoxType::A, "one_line: type A only");
    int n = W.rank();
    std::vector<int> line(std::size_t(n) + 1);
    for (int k = 0; k <= n; ++k) line[std::size_t(k)] = k + 1;
    for (int i : W.word(w)) std::swap(line[std::size_t(i)], line[std::size_t(i) + 1]);
    return line;
}

Elt from_one_line(const CoxGroup& W, const std::vector<int>& line) {
    require(W.diagram().type == CoxType::A, "from_one_line: type A only");
    require(int(line.size()) == W.rank() + 1, "from_one_line: wrong size");
    std::vector<int> a = line;
    std::vector<int> word;
    bool moved = true;
    while (moved) {
        moved = false;
        for (std::size_t k = 0; k + 1 < a.size(); ++k)
            if (a[k] > a[k + 1]) {
                std::swap(a[k], a[k + 1]);
                word.push_back(int(k));
                moved = true;
            }
    }
    std::reverse(word.begin(), word.end());
    return W.from_word(word);
}

std::string one_line_str(const CoxGroup& W, const Elt& w) {
    std::vector<int> line = one_line(W, w);
    bool wide = int(line.size()) > 9;
    std::ostringstream os;
    for (std::size_t k = 0; k < line.size(); ++k) {
        if (wide && k) os << ",";
        os << line[k];
    }
    return os.str();
}

std::vector<int> parse_one_line(const std::string& s) {
    std::vector<int> out;
    if (s.find(',') != std::string::npos) {
        std::stringstream ss(s);
        std::string tok;
        while (std::getline(ss, tok, ',')) out.push_back(std::stoi(tok));
    } else {
        for (char c : s) {
            require(c >= '1' && c <= '9', "parse_one_line: digits only; use commas for n+1 > 9");
            out.push_back(c - '0');
        }
    }
    return out;
}

std::pair<int, int> root_transposition(const CoxGroup& W, int root_index) {
    require(W.diagram().type == CoxType::A, "root_transposition: type A only");
    const auto& v = W.roots().int_coords[std::size_t(root_index)];
    int first = -1, last = -1;
    for (int j = 0; j < W.rank(); ++j)
        if (v[std::size_t(j)] != 0) {
            if (first < 0) first = j;
            last = j;
        }
    return {first + 1, last + 2};
}

} // namespace cambpop

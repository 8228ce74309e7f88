#include "cambpop/motzkin.hpp"

#include "cambpop/errors.hpp"

namespace cambpop {

bool is_motzkin(const std::string& path) {
    int height = 0;
    for (char c : path) {
        if (c == 'U') ++height;
        else if (c == 'D') --height;
        else if (c != 'H') return false;
        if (height < 0) return false;
    }
    return height == 0;
}

std::vector<std::pair<int, int>> motzkin_peaks(const std::string& path) {
    std::vector<std::pair<int, int>> out;
    int height = 0;
    for (std::size_t k = 0; k < path.size(); ++k) {
        if (path[k] == 'U') ++height;
        else if (path[k] == 'D') --height;
        if (path[k] == 'U' && k + 1 < path.size() && path[k + 1] == 'D')
            out.emplace_back(int(k) + 1, height);  // point (k+1, height)
    }
    return out;
}

bool has_height1_peak(const std::string& path) {
    for (auto [x, h] : motzkin_peaks(path))
        if (h == 1) return true;
    return false;
}

int count_steps(const std::string& path, char step) {
    int c = 0;
    for (char x : path)
        if (x == step) ++c;
    return c;
}

namespace {
void gen(int remaining, int height, std::string& cur, std::vector<std::string>& out) {
    if (remaining == 0) {
        if (height == 0) out.push_back(cur);
        return;
    }
    if (height + remaining < 0) return;
    for (char c : {'U', 'D', 'H'}) {
        int nh = height + (c == 'U' ? 1 : c == 'D' ? -1 : 0);
        if (nh < 0 || nh > remaining - 1) continue;
        cur.push_back(c);
        gen(remaining - 1, nh, cur, out);
        cur.pop_back();
    }
}
} // namespace

std::vector<std::string> all_motzkin(int n) {
    std::vector<std::string> out;
    std::string cur;
    gen(n, 0, cur, out);
    return out;
}

std::vector<std::string> all_mbar(int n) {
    std::vector<std::string> out;
    for (auto& p : all_motzkin(n))
        if (!has_height1_peak(p)) out.push_back(p);
    return out;
}

QSeries motzkin_series(int order) {
    QSeries M = QSeries::constant(order, 1);
    for (int it = 0; it <= order + 1; ++it)
        M = QSeries::constant(order, 1) + M.shift(0, 1) + (M * M).shift(1, 2);
    return M;
}

QSeries mbar_series(int order) {
    QSeries M = motzkin_series(order);
    QSeries Mm1 = M + QSeries::constant(order, -1);
    QSeries Mb = QSeries::constant(order, 1);
    for (int it = 0; it <= order + 1; ++it)
        Mb = QSeries::constant(order, 1) + Mb.shift(0, 1) + (Mm1 * Mb).shift(1, 2);
    return Mb;
}

IntPoly bipartite_facet_polynomial_series(int n) {
    require(n >= 1, "bipartite_facet_polynomial_series: n >= 1");
    // z^n coefficient of (1/qz)(Mbar(1/q,qz)-1)-1 equals
    // sum over Mbar_{n+1} of q^{n-#U}: reverse the q-coefficients of the
    // z^{n+1} coefficient of Mbar(q,z) around degree n.
    QSeries Mb = mbar_series(n + 1);
    const IntPoly& c = Mb.a[std::size_t(n) + 1];
    std::vector<long long> rev(std::size_t(n) + 1, 0);
    for (int j = 0; j <= c.degree(); ++j) {
        long long a = c.coeff(j);
        if (a == 0) continue;
        require(n - j >= 0, "unexpected #U exceeding n");
        rev[std::size_t(n - j)] += a;
    }
    return IntPoly(std::move(rev));
}

MotzkinCensus motzkin_census(int n) {
    MotzkinCensus out;
    for (auto& p : all_motzkin(n)) {
        ++out.m_count;
        out.m_by_up += IntPoly::q_pow(count_steps(p, 'U'));
        if (!has_height1_peak(p)) {
            ++out.mbar_count;
            out.mbar_by_up += IntPoly::q_pow(count_steps(p, 'U'));
        }
    }
    // series cross-check
    QSeries M = motzkin_series(n), Mb = mbar_series(n);
    require(M.a[std::size_t(n)] == out.m_by_up, "motzkin census disagrees with the M series");
    require(Mb.a[std::size_t(n)] == out.mbar_by_up, "motzkin census disagrees with the Mbar series");
    return out;
}

} // namespace cambpop

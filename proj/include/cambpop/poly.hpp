#pragma once

#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

namespace cambpop {

// Integer polynomial in q, coefficients indexed by degree.
struct IntPoly {
    std::vector<long long> c;

    IntPoly() = default;
    explicit IntPoly(std::vector<long long> v) : c(std::move(v)) { trim(); }

    static IntPoly one() { return IntPoly({1}); }
    static IntPoly q_pow(int k) {
        std::vector<long long> v(std::size_t(k) + 1, 0);
        v[std::size_t(k)] = 1;
        return IntPoly(std::move(v));
    }

    void trim() {
        while (!c.empty() && c.back() == 0) c.pop_back();
    }
    bool is_zero() const { return c.empty(); }
    int degree() const { return int(c.size()) - 1; }
    long long coeff(int k) const {
        return (k >= 0 && k < int(c.size())) ? c[std::size_t(k)] : 0;
    }
    long long sum_coeffs() const {
        long long s = 0;
        for (auto x : c) s += x;
        return s;
    }

    IntPoly& operator+=(const IntPoly& o) {
        if (o.c.size() > c.size()) c.resize(o.c.size(), 0);
        for (std::size_t i = 0; i < o.c.size(); ++i) c[i] += o.c[i];
        trim();
        return *this;
    }
    friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
    friend IntPoly operator*(const IntPoly& a, const IntPoly& b) {
        if (a.is_zero() || b.is_zero()) return IntPoly();
        std::vector<long long> v(a.c.size() + b.c.size() - 1, 0);
        for (std::size_t i = 0; i < a.c.size(); ++i)
            for (std::size_t j = 0; j < b.c.size(); ++j) v[i + j] += a.c[i] * b.c[j];
        return IntPoly(std::move(v));
    }
    friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.c == b.c; }
    friend bool operator!=(const IntPoly& a, const IntPoly& b) { return !(a == b); }

    std::string str() const {
        if (is_zero()) return "0";
        std::ostringstream os;
        bool first = true;
        for (int k = 0; k <= degree(); ++k) {
            long long a = coeff(k);
            if (a == 0) continue;
            if (!first) os << (a > 0 ? " + " : " - ");
            else if (a < 0) os << "-";
            long long m = a > 0 ? a : -a;
            if (m != 1 || k == 0) os << m;
            if (k == 1) os << "q";
            else if (k > 1) os << "q^" << k;
            first = false;
        }
        return os.str();
    }
};

// Truncated power series in z whose coefficients are IntPoly in q.
struct QSeries {
    int order;                 // coefficients kept for z^0 .. z^order
    std::vector<IntPoly> a;

    explicit QSeries(int ord) : order(ord), a(std::size_t(ord) + 1) {}

    static QSeries constant(int ord, long long v) {
        QSeries s(ord);
        if (v) s.a[0] = IntPoly({v});
        return s;
    }

    friend QSeries operator+(const QSeries& x, const QSeries& y) {
        QSeries s(x.order);
        for (int k = 0; k <= x.order; ++k) s.a[std::size_t(k)] = x.a[std::size_t(k)] + y.a[std::size_t(k)];
        return s;
    }
    friend QSeries operator*(const QSeries& x, const QSeries& y) {
        QSeries s(x.order);
        for (int i = 0; i <= x.order; ++i) {
            if (x.a[std::size_t(i)].is_zero()) continue;
            for (int j = 0; i + j <= x.order; ++j)
                s.a[std::size_t(i + j)] += x.a[std::size_t(i)] * y.a[std::size_t(j)];
        }
        return s;
    }
    // multiply by q^p z^k
    QSeries shift(int p, int k) const {
        QSeries s(order);
        IntPoly qp = IntPoly::q_pow(p);
        for (int i = 0; i + k <= order; ++i) s.a[std::size_t(i + k)] = a[std::size_t(i)] * qp;
        return s;
    }
    friend bool operator==(const QSeries& x, const QSeries& y) { return x.a == y.a; }
};

} // namespace cambpop

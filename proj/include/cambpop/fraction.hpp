#pragma once

#include <cstdint>
#include <numeric>
#include <ostream>

#include "cambpop/errors.hpp"

namespace cambpop {

// Exact rational with int64 parts.  Dimensions in this project stay tiny,
// so no bignum is needed; overflow is guarded in debug via the invariant
// that reduced numerators/denominators stay far below 2^62.
struct Frac {
    std::int64_t num = 0;
    std::int64_t den = 1;

    Frac() = default;
    Frac(std::int64_t n) : num(n), den(1) {}
    Frac(std::int64_t n, std::int64_t d) : num(n), den(d) { normalize(); }

    void normalize() {
        require(den != 0, "Frac: zero denominator");
        if (den < 0) { num = -num; den = -den; }
        std::int64_t g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) { num /= g; den /= g; }
    }

    bool is_zero() const { return num == 0; }

    friend Frac operator+(const Frac& a, const Frac& b) {
        return Frac(a.num * b.den + b.num * a.den, a.den * b.den);
    }
    friend Frac operator-(const Frac& a, const Frac& b) {
        return Frac(a.num * b.den - b.num * a.den, a.den * b.den);
    }
    friend Frac operator*(const Frac& a, const Frac& b) {
        return Frac(a.num * b.num, a.den * b.den);
    }
    friend Frac operator/(const Frac& a, const Frac& b) {
        require(b.num != 0, "Frac: division by zero");
        return Frac(a.num * b.den, a.den * b.num);
    }
    Frac operator-() const { return Frac(-num, den); }
    Frac& operator+=(const Frac& o) { return *this = *this + o; }
    Frac& operator-=(const Frac& o) { return *this = *this - o; }
    Frac& operator*=(const Frac& o) { return *this = *this * o; }
    Frac& operator/=(const Frac& o) { return *this = *this / o; }

    friend bool operator==(const Frac& a, const Frac& b) {
        return a.num == b.num && a.den == b.den;
    }
    friend bool operator!=(const Frac& a, const Frac& b) { return !(a == b); }

    friend std::ostream& operator<<(std::ostream& os, const Frac& f) {
        os << f.num;
        if (f.den != 1) os << '/' << f.den;
        return os;
    }
};

} // namespace cambpop

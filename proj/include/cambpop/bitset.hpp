#pragma once

#include <cstdint>
#include <cstddef>
#include <functional>
#include <vector>

namespace cambpop {

// Fixed-size dynamic bitset.  All binary operations require equal sizes.
class Bitset {
public:
    Bitset() : nbits_(0) {}
    explicit Bitset(std::size_t n) : nbits_(n), w_((n + 63) / 64, 0) {}

    std::size_t size() const { return nbits_; }

    bool test(std::size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1; }
    void set(std::size_t i) { w_[i >> 6] |= (std::uint64_t{1} << (i & 63)); }
    void reset(std::size_t i) { w_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
    void flip(std::size_t i) { w_[i >> 6] ^= (std::uint64_t{1} << (i & 63)); }

    std::size_t count() const {
        std::size_t c = 0;
        for (auto x : w_) c += std::size_t(__builtin_popcountll(x));
        return c;
    }
    bool any() const {
        for (auto x : w_) if (x) return true;
        return false;
    }
    bool none() const { return !any(); }

    bool subset_of(const Bitset& o) const {
        for (std::size_t k = 0; k < w_.size(); ++k)
            if (w_[k] & ~o.w_[k]) return false;
        return true;
    }
    bool intersects(const Bitset& o) const {
        for (std::size_t k = 0; k < w_.size(); ++k)
            if (w_[k] & o.w_[k]) return true;
        return false;
    }

    Bitset& operator&=(const Bitset& o) {
        for (std::size_t k = 0; k < w_.size(); ++k) w_[k] &= o.w_[k];
        return *this;
    }
    Bitset& operator|=(const Bitset& o) {
        for (std::size_t k = 0; k < w_.size(); ++k) w_[k] |= o.w_[k];
        return *this;
    }
    Bitset& operator^=(const Bitset& o) {
        for (std::size_t k = 0; k < w_.size(); ++k) w_[k] ^= o.w_[k];
        return *this;
    }
    friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }
    friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }
    friend Bitset operator^(Bitset a, const Bitset& b) { return a ^= b; }

    friend bool operator==(const Bitset& a, const Bitset& b) {
        return a.nbits_ == b.nbits_ && a.w_ == b.w_;
    }
    friend bool operator!=(const Bitset& a, const Bitset& b) { return !(a == b); }

    // Iterate set bits in increasing order.
    template <class F>
    void for_each(F&& f) const {
        for (std::size_t k = 0; k < w_.size(); ++k) {
            std::uint64_t x = w_[k];
            while (x) {
                unsigned b = unsigned(__builtin_ctzll(x));
                f(std::size_t(64 * k + b));
                x &= x - 1;
            }
        }
    }
    std::vector<int> bits() const {
        std::vector<int> out;
        for_each([&](std::size_t i) { out.push_back(int(i)); });
        return out;
    }

    std::size_t hash() const {
        std::size_t h = nbits_;
        for (auto x : w_) h = h * 1000003u ^ std::hash<std::uint64_t>{}(x);
        return h;
    }

private:
    std::size_t nbits_;
    std::vector<std::uint64_t> w_;
};

struct BitsetHash {
    std::size_t operator()(const Bitset& b) const { return b.hash(); }
};

} // namespace cambpop

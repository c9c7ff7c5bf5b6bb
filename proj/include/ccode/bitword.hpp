#pragma once

#include <array>
#include <bit>
#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "ccode/errors.hpp"

namespace ccode {

inline constexpr int kMaxBits = 256;

// A word of {0,1}^n. Coordinate i (1-based) lives in bit i-1, so the
// least significant bit of index() is coordinate 1.
class BitWord {
public:
    static constexpr int kLimbs = kMaxBits / 64;

    BitWord() = default;
    explicit BitWord(int n) : n_(n) {
        if (n < 0 || n > kMaxBits)
            throw InvalidParameter("word length " + std::to_string(n) + " outside [0," +
                                   std::to_string(kMaxBits) + "]");
    }

    static BitWord from_index(int n, std::uint64_t idx) {
        BitWord w(n);
        if (n < 64) idx &= (std::uint64_t{1} << n) - 1;
        w.limb_[0] = idx;
        return w;
    }

    // Character j of the string is coordinate j+1.
    static BitWord from_string(std::string_view s) {
        BitWord w(static_cast<int>(s.size()));
        for (int i = 0; i < w.n_; ++i) {
            if (s[i] == '1')
                w.set(i);
            else if (s[i] != '0')
                throw ParseError("non-binary character in word '" + std::string(s) + "'");
        }
        return w;
    }

    static BitWord unit(int n, int i) {
        BitWord w(n);
        w.set(i);
        return w;
    }

    static BitWord ones(int n) {
        BitWord w(n);
        for (int i = 0; i < n; ++i) w.set(i);
        return w;
    }

    int size() const { return n_; }

    // 0-based bit access: get(0) is coordinate 1.
    bool get(int i) const { return (limb_[i >> 6] >> (i & 63)) & 1u; }
    void set(int i, bool v = true) {
        const std::uint64_t m = std::uint64_t{1} << (i & 63);
        if (v)
            limb_[i >> 6] |= m;
        else
            limb_[i >> 6] &= ~m;
    }
    void flip(int i) { limb_[i >> 6] ^= std::uint64_t{1} << (i & 63); }

    int weight() const {
        int w = 0;
        for (auto l : limb_) w += std::popcount(l);
        return w;
    }
    bool is_zero() const {
        for (auto l : limb_)
            if (l) return false;
        return true;
    }

    // Position of the lowest set bit, or -1.
    int lowest() const {
        for (int j = 0; j < kLimbs; ++j)
            if (limb_[j]) return 64 * j + std::countr_zero(limb_[j]);
        return -1;
    }

    std::uint64_t index() const { return limb_[0]; }
    const std::array<std::uint64_t, kLimbs>& limbs() const { return limb_; }

    // Bits [from, from+len) as an integer; len <= 64.
    std::uint64_t slice(int from, int len) const {
        std::uint64_t out = 0;
        for (int i = 0; i < len; ++i)
            if (get(from + i)) out |= std::uint64_t{1} << i;
        return out;
    }

    std::string str() const {
        std::string s(n_, '0');
        for (int i = 0; i < n_; ++i)
            if (get(i)) s[i] = '1';
        return s;
    }

    BitWord& operator^=(const BitWord& o) {
        for (int j = 0; j < kLimbs; ++j) limb_[j] ^= o.limb_[j];
        return *this;
    }
    BitWord& operator&=(const BitWord& o) {
        for (int j = 0; j < kLimbs; ++j) limb_[j] &= o.limb_[j];
        return *this;
    }
    friend BitWord operator^(BitWord a, const BitWord& b) { return a ^= b; }
    friend BitWord operator&(BitWord a, const BitWord& b) { return a &= b; }

    friend bool operator==(const BitWord& a, const BitWord& b) {
        return a.n_ == b.n_ && a.limb_ == b.limb_;
    }

    // Lexicographic order on the string form: coordinate 1 is most significant.
    friend bool lex_less(const BitWord& a, const BitWord& b) {
        for (int j = 0; j < kLimbs; ++j) {
            const std::uint64_t diff = a.limb_[j] ^ b.limb_[j];
            if (diff) return !((a.limb_[j] >> std::countr_zero(diff)) & 1u);
        }
        return false;
    }

    friend int dot(const BitWord& a, const BitWord& b) {
        std::uint64_t acc = 0;
        for (int j = 0; j < kLimbs; ++j) acc ^= a.limb_[j] & b.limb_[j];
        return std::popcount(acc) & 1;
    }

    friend int distance(const BitWord& a, const BitWord& b) { return (a ^ b).weight(); }

private:
    int n_ = 0;
    std::array<std::uint64_t, kLimbs> limb_{};
};

struct BitWordHash {
    std::size_t operator()(const BitWord& w) const {
        std::size_t h = static_cast<std::size_t>(w.size());
        for (auto l : w.limbs()) h = h * 0x9E3779B97F4A7C15ull ^ (l + (h >> 7));
        return h;
    }
};

inline int popcount64(std::uint64_t x) { return std::popcount(x); }

}  // namespace ccode

#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <functional>
#include <vector>

#include "ccode/bitword.hpp"

namespace ccode {

using BigInt = boost::multiprecision::cpp_int;

inline constexpr int kWhtCap = 26;
inline constexpr int kConvolutionCap = 22;

// Unnormalized butterfly: v(s) <- sum_x v(x) (-1)^{x.s}. Works for any
// ring scalar (int64, BigInt, double); v.size() must be a power of two.
template <class T>
void wht_inplace(std::vector<T>& v) {
    const std::size_t len = v.size();
    for (std::size_t h = 1; h < len; h <<= 1)
        for (std::size_t i = 0; i < len; i += h << 1)
            for (std::size_t j = i; j < i + h; ++j) {
                T a = v[j];
                T b = v[j + h];
                v[j] = a + b;
                v[j + h] = a - b;
            }
}

template <class T>
std::vector<T> wht(std::vector<T> v) {
    wht_inplace(v);
    return v;
}

struct IntSpectrum {
    int n = 0;
    std::vector<BigInt> values;  // indexed by word index, bit i = coordinate i+1
};

IntSpectrum wht(const IntSpectrum& spec);

// K_i^{(n)}(j) = sum_t (-1)^t C(j,t) C(n-j,i-t).
BigInt krawtchouk(int n, int i, int j);
// Same value through the direct sum, no memo; used as an oracle.
BigInt krawtchouk_sum(int n, int i, int j);
// Whole table for a blocklength, row i, column j; filled once and shared.
const std::vector<std::vector<BigInt>>& krawtchouk_table(int n);
// Double-precision copy for LP model building.
std::vector<std::vector<double>> krawtchouk_table_double(int n);

BigInt binomial(int n, int k);

// W(j) = sum over words s of weight j of F(s).
std::vector<BigInt> weight_class_sums(const std::function<BigInt(const BitWord&)>& char_sum, int n);

// v(x) = #{z : z in A and x^z in A}, computed through the transform.
std::vector<std::int64_t> self_convolution_counts(const std::function<bool(const BitWord&)>& member,
                                                  int n);
std::vector<std::int64_t> self_convolution_counts(const std::vector<char>& indicator, int n);

// Exact quotient; throws ConsistencyError on a nonzero remainder.
BigInt exact_div(const BigInt& num, const BigInt& den, const char* what);

}  // namespace ccode

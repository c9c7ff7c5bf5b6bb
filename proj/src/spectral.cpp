#include "ccode/spectral.hpp"

#include <map>
#include <memory>
#include <mutex>

namespace ccode {

IntSpectrum wht(const IntSpectrum& spec) {
    if (spec.n > kWhtCap)
        throw CapExceeded("transform length 2^" + std::to_string(spec.n) + " exceeds cap 2^" +
                          std::to_string(kWhtCap));
    if (spec.values.size() != (std::size_t{1} << spec.n))
        throw InvalidParameter("spectrum size does not match 2^n");
    return IntSpectrum{spec.n, wht(spec.values)};
}

BigInt binomial(int n, int k) {
    if (k < 0 || k > n || n < 0) return 0;
    k = std::min(k, n - k);
    BigInt r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

BigInt krawtchouk_sum(int n, int i, int j) {
    BigInt s = 0;
    for (int t = 0; t <= i; ++t) {
        BigInt term = binomial(j, t) * binomial(n - j, i - t);
        if (t & 1)
            s -= term;
        else
            s += term;
    }
    return s;
}

namespace {

struct KrawTable {
    std::once_flag once;
    std::vector<std::vector<BigInt>> k;
};

std::vector<std::vector<BigInt>> build_table(int n) {
    std::vector<std::vector<BigInt>> k(n + 1, std::vector<BigInt>(n + 1));
    for (int j = 0; j <= n; ++j) {
        k[0][j] = 1;
        if (n >= 1) k[1][j] = n - 2 * j;
        for (int i = 1; i < n; ++i) {
            BigInt num = BigInt(n - 2 * j) * k[i][j] - BigInt(n - i + 1) * k[i - 1][j];
            k[i + 1][j] = exact_div(num, BigInt(i + 1), "Krawtchouk recurrence");
        }
    }
    // cross-check against the defining sum
    for (int i = 0; i <= n; ++i)
        for (int j = 0; j <= n; ++j) {
            if (n > 40 && (i + 3 * j) % 23 != 0 && i > 2 && j > 0) continue;
            if (k[i][j] != krawtchouk_sum(n, i, j))
                throw ConsistencyError("Krawtchouk recurrence disagrees with the defining sum");
        }
    return k;
}

}  // namespace

const std::vector<std::vector<BigInt>>& krawtchouk_table(int n) {
    static std::mutex mu;
    static std::map<int, std::unique_ptr<KrawTable>> cache;
    if (n < 0 || n > 4 * kMaxBits) throw InvalidParameter("Krawtchouk length out of range");
    KrawTable* t;
    {
        std::lock_guard<std::mutex> lock(mu);
        auto& slot = cache[n];
        if (!slot) slot = std::make_unique<KrawTable>();
        t = slot.get();
    }
    std::call_once(t->once, [&] { t->k = build_table(n); });
    return t->k;
}

BigInt krawtchouk(int n, int i, int j) {
    if (n < 0 || i < 0 || j < 0 || i > n || j > n)
        throw InvalidParameter("Krawtchouk index out of range: n=" + std::to_string(n) + " i=" +
                               std::to_string(i) + " j=" + std::to_string(j));
    return krawtchouk_table(n)[i][j];
}

std::vector<std::vector<double>> krawtchouk_table_double(int n) {
    const auto& k = krawtchouk_table(n);
    std::vector<std::vector<double>> out(n + 1, std::vector<double>(n + 1));
    for (int i = 0; i <= n; ++i)
        for (int j = 0; j <= n; ++j) out[i][j] = k[i][j].convert_to<double>();
    return out;
}

std::vector<BigInt> weight_class_sums(const std::function<BigInt(const BitWord&)>& char_sum, int n) {
    if (n > kWhtCap)
        throw CapExceeded("weight-class sums over 2^" + std::to_string(n) + " words exceed cap 2^" +
                          std::to_string(kWhtCap));
    std::vector<BigInt> w(n + 1);
    const std::uint64_t total = std::uint64_t{1} << n;
    for (std::uint64_t s = 0; s < total; ++s) {
        const BitWord word = BitWord::from_index(n, s);
        w[word.weight()] += char_sum(word);
    }
    return w;
}

std::vector<std::int64_t> self_convolution_counts(const std::vector<char>& indicator, int n) {
    if (n > kConvolutionCap)
        throw CapExceeded("self-convolution over 2^" + std::to_string(n) + " words exceeds cap 2^" +
                          std::to_string(kConvolutionCap));
    // |F| <= |A| <= 2^n and every partial sum of the inverse pass is bounded
    // by sum_s F(s)^2 = 2^n |A| <= 2^44, so int64 is exact here.
    std::vector<std::int64_t> f(indicator.begin(), indicator.end());
    wht_inplace(f);
    for (auto& x : f) x *= x;
    wht_inplace(f);
    const std::int64_t len = std::int64_t{1} << n;
    for (auto& x : f) {
        if (x % len != 0) throw ConsistencyError("self-convolution: inverse transform not divisible by 2^n");
        x /= len;
    }
    return f;
}

std::vector<std::int64_t> self_convolution_counts(const std::function<bool(const BitWord&)>& member,
                                                  int n) {
    if (n > kConvolutionCap)
        throw CapExceeded("self-convolution over 2^" + std::to_string(n) + " words exceeds cap 2^" +
                          std::to_string(kConvolutionCap));
    std::vector<char> ind(std::size_t{1} << n);
    for (std::size_t x = 0; x < ind.size(); ++x) ind[x] = member(BitWord::from_index(n, x)) ? 1 : 0;
    return self_convolution_counts(ind, n);
}

BigInt exact_div(const BigInt& num, const BigInt& den, const char* what) {
    BigInt q, r;
    boost::multiprecision::divide_qr(num, den, q, r);
    if (r != 0) throw ConsistencyError(std::string(what) + ": division left a remainder");
    return q;
}

}  // namespace ccode

#include "ccode/constraints.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <regex>

namespace ccode {

namespace {

std::string int_param(const std::string& text, const std::string& key, int& out) {
    const std::regex re("(^|,)" + key + "=(-?\\d+)(,|$)");
    std::smatch m;
    if (!std::regex_search(text, m, re)) return "missing parameter '" + key + "'";
    out = std::stoi(m[2]);
    return {};
}

BigInt pow2(int e) { return BigInt(1) << e; }

// Zero-run lengths: leading, internal gaps, trailing. Empty gaps vector and
// lead == n for the all-zeros word.
struct Runs {
    int lead = 0, trail = 0;
    std::vector<int> gaps;
    bool zero = true;
};

Runs runs_of(const BitWord& x) {
    Runs r;
    const int n = x.size();
    int last = -1;
    for (int i = 0; i < n; ++i) {
        if (!x.get(i)) continue;
        if (last < 0)
            r.lead = i;
        else
            r.gaps.push_back(i - last - 1);
        last = i;
    }
    if (last < 0) {
        r.lead = n;
        return r;
    }
    r.zero = false;
    r.trail = n - 1 - last;
    return r;
}

}  // namespace

void ConstraintSpec::check(int n) const {
    if (n < 1) throw InvalidParameter("blocklength must be positive");
    switch (kind) {
        case ConstraintKind::Subblock:
            if (p < 1 || n % p != 0)
                throw InvalidParameter("subblock: p=" + std::to_string(p) + " does not divide n=" + std::to_string(n));
            if (z < 0 || z > n / p)
                throw InvalidParameter("subblock: z=" + std::to_string(z) + " outside [0," + std::to_string(n / p) + "]");
            break;
        case ConstraintKind::RllDInf:
            if (d < 1) throw InvalidParameter("rll: d must be >= 1");
            break;
        case ConstraintKind::FixedWeight:
            if (i < 0 || i > n) throw InvalidParameter("weight: i=" + std::to_string(i) + " outside [0,n]");
            break;
        case ConstraintKind::OddRelaxed:
            if (n % 2 != 0) throw InvalidParameter("odd (relaxed) constraint is only supported for even n");
            break;
        default:
            break;
    }
}

ConstraintSpec parse_constraint(const std::string& text) {
    const auto colon = text.find(':');
    const std::string kind = text.substr(0, colon);
    const std::string params = colon == std::string::npos ? "" : text.substr(colon + 1);
    auto need = [&](const std::string& key, int& v) {
        const std::string err = int_param(params, key, v);
        if (!err.empty()) throw ParseError("constraint '" + text + "': " + err);
    };
    auto none = [&] {
        if (!params.empty()) throw ParseError("constraint '" + text + "' takes no parameters");
    };
    ConstraintSpec c;
    if (kind == "2charge") {
        none();
        c = ConstraintSpec::two_charge();
    } else if (kind == "subblock") {
        need("p", c.p);
        need("z", c.z);
        c.kind = ConstraintKind::Subblock;
    } else if (kind == "rll") {
        need("d", c.d);
        c.kind = ConstraintKind::RllDInf;
        if (c.d < 1) throw ParseError("constraint '" + text + "': d must be >= 1");
    } else if (kind == "odd-strict") {
        none();
        c = ConstraintSpec::odd_strict();
    } else if (kind == "odd") {
        none();
        c = ConstraintSpec::odd_relaxed();
    } else if (kind == "even-strict") {
        none();
        c = ConstraintSpec::even_strict();
    } else if (kind == "weight") {
        need("i", c.i);
        c.kind = ConstraintKind::FixedWeight;
    } else if (kind == "full") {
        none();
        c = ConstraintSpec::full();
    } else {
        throw ParseError("unknown constraint '" + text + "'");
    }
    return c;
}

std::string to_string(const ConstraintSpec& c) {
    switch (c.kind) {
        case ConstraintKind::TwoCharge: return "2charge";
        case ConstraintKind::Subblock: return "subblock:p=" + std::to_string(c.p) + ",z=" + std::to_string(c.z);
        case ConstraintKind::RllDInf: return "rll:d=" + std::to_string(c.d);
        case ConstraintKind::OddStrict: return "odd-strict";
        case ConstraintKind::OddRelaxed: return "odd";
        case ConstraintKind::EvenStrict: return "even-strict";
        case ConstraintKind::FixedWeight: return "weight:i=" + std::to_string(c.i);
        case ConstraintKind::Full: return "full";
    }
    return "?";
}

bool member(const ConstraintSpec& c, const BitWord& x) {
    const int n = x.size();
    c.check(n);
    switch (c.kind) {
        case ConstraintKind::TwoCharge: {
            int sum = 0;
            for (int i = 0; i < n; ++i) {
                sum += x.get(i) ? -1 : 1;
                if (sum < 0 || sum > 2) return false;
            }
            return true;
        }
        case ConstraintKind::Subblock: {
            const int len = n / c.p;
            for (int l = 0; l < c.p; ++l) {
                int w = 0;
                for (int i = 0; i < len; ++i) w += x.get(l * len + i);
                if (w != c.z) return false;
            }
            return true;
        }
        case ConstraintKind::RllDInf: {
            const Runs r = runs_of(x);
            return std::all_of(r.gaps.begin(), r.gaps.end(), [&](int g) { return g >= c.d; });
        }
        case ConstraintKind::OddStrict: {
            const Runs r = runs_of(x);
            if (r.zero) return true;
            return r.lead % 2 == 1 && r.trail % 2 == 1 &&
                   std::all_of(r.gaps.begin(), r.gaps.end(), [](int g) { return g % 2 == 1; });
        }
        case ConstraintKind::OddRelaxed: {
            const Runs r = runs_of(x);
            return std::all_of(r.gaps.begin(), r.gaps.end(), [](int g) { return g % 2 == 1; });
        }
        case ConstraintKind::EvenStrict: {
            const Runs r = runs_of(x);
            if (r.zero) return true;
            return r.lead % 2 == 0 && r.trail % 2 == 0 &&
                   std::all_of(r.gaps.begin(), r.gaps.end(), [](int g) { return g % 2 == 0; });
        }
        case ConstraintKind::FixedWeight:
            return x.weight() == c.i;
        case ConstraintKind::Full:
            return true;
    }
    return false;
}

BigInt cardinality(const ConstraintSpec& c, int n) {
    c.check(n);
    switch (c.kind) {
        case ConstraintKind::TwoCharge: return pow2(n / 2);
        case ConstraintKind::Subblock: return boost::multiprecision::pow(binomial(n / c.p, c.z), c.p);
        case ConstraintKind::OddStrict: return n % 2 ? pow2(n / 2) : BigInt(1);
        case ConstraintKind::OddRelaxed: return pow2(n / 2 + 1) - 1;
        case ConstraintKind::FixedWeight: return binomial(n, c.i);
        case ConstraintKind::Full: return pow2(n);
        case ConstraintKind::RllDInf:
        case ConstraintKind::EvenStrict:
            // F(0^n) = |A|; the suffix recurrences are exact
            return char_sum(c, BitWord(n));
    }
    return 0;
}

std::vector<BitWord> two_charge_basis(int n) {
    std::vector<BitWord> b{BitWord::unit(n, 0)};
    for (int i = 1; i <= (n + 1) / 2 - 1; ++i) {
        BitWord w(n);
        w.set(2 * i - 1);
        w.set(2 * i);
        b.push_back(w);
    }
    return b;
}

BigInt char_sum_two_charge(int n, const BitWord& s) {
    // s in span(B) iff the pair coordinates agree and (for even n) s_n = 0
    const int pairs = (n + 1) / 2 - 1;
    int ones = 0;
    for (int i = 1; i <= pairs; ++i) {
        const bool a = s.get(2 * i - 1), b = s.get(2 * i);
        if (a != b) return 0;
        ones += a;
    }
    if (n % 2 == 0 && s.get(n - 1)) return 0;
    const BigInt mag = pow2(n / 2);
    return ones % 2 ? BigInt(-mag) : mag;
}

BigInt char_sum_subblock(int n, int p, int z, const BitWord& s) {
    ConstraintSpec::subblock(p, z).check(n);
    const int len = n / p;
    const auto& k = krawtchouk_table(len);
    BigInt prod = 1;
    for (int l = 0; l < p; ++l) {
        int w = 0;
        for (int i = 0; i < len; ++i) w += s.get(l * len + i);
        prod *= k[z][w];
        if (prod == 0) break;
    }
    return prod;
}

namespace {

// Suffix DP shared by the run-length recurrences; g[i] is F for the suffix
// starting at 0-based position i, g[n] = 1 for the empty word.
template <class T>
T rll_suffix(int n, int d, const BitWord& s) {
    std::vector<T> g(n + 1);
    g[n] = 1;
    for (int i = n - 1; i >= 0; --i) {
        const int len = n - i;
        if (len <= d + 1) {
            // members of this length have at most one 1
            T v = 1;
            for (int j = i; j < n; ++j) v += s.get(j) ? T(-1) : T(1);
            g[i] = v;
        } else {
            const T tail = g[i + d + 1];
            g[i] = s.get(i) ? T(g[i + 1] - tail) : T(g[i + 1] + tail);
        }
    }
    return g[0];
}

template <class T>
T even_suffix(int n, const BitWord& s) {
    std::vector<T> g(n + 1);
    for (int i = n - 1; i >= 0; --i) {
        const int len = n - i;
        const bool si = s.get(i);
        if (len == 1) {
            // {0, 1}
            g[i] = si ? T(0) : T(2);
        } else if (len == 2) {
            // {00, 11}
            g[i] = (si ^ s.get(i + 1)) ? T(0) : T(2);
        } else if (len % 2 == 0) {
            g[i] = si ? T(g[i + 2] - g[i + 1] + 1) : T(g[i + 1] + g[i + 2] - 1);
        } else {
            g[i] = si ? T(g[i + 2] - g[i + 1]) : T(g[i + 1] + g[i + 2]);
        }
    }
    return g[0];
}

}  // namespace

BigInt char_sum_rll(int n, int d, const BitWord& s) {
    if (d < 1) throw InvalidParameter("rll: d must be >= 1");
    if (n <= 60) return BigInt(rll_suffix<std::int64_t>(n, d, s));
    return rll_suffix<BigInt>(n, d, s);
}

BigInt char_sum_even(int n, const BitWord& s) {
    if (n < 1) throw InvalidParameter("even-strict: n must be >= 1");
    if (n <= 60) return BigInt(even_suffix<std::int64_t>(n, s));
    return even_suffix<BigInt>(n, s);
}

BigInt char_sum_odd_strict(int n, const BitWord& s) {
    if (n % 2 == 0) return 1;  // the set is {0^n}
    for (int i = 1; i < n; i += 2)
        if (s.get(i)) return 0;
    return pow2(n / 2);
}

BigInt char_sum_odd_relaxed(int n, const BitWord& s) {
    ConstraintSpec::odd_relaxed().check(n);
    if (s.is_zero()) return pow2(n / 2 + 1) - 1;
    bool odd = false, even = false;
    for (int i = 0; i < n; ++i)
        if (s.get(i)) (i % 2 == 0 ? odd : even) = true;
    if (odd != even) return pow2(n / 2) - 1;
    return -1;
}

BigInt char_sum_fixed_weight(int n, int i, const BitWord& s) {
    ConstraintSpec::fixed_weight(i).check(n);
    return krawtchouk_table(n)[i][s.weight()];
}

BigInt char_sum(const ConstraintSpec& c, const BitWord& s) {
    const int n = s.size();
    c.check(n);
    switch (c.kind) {
        case ConstraintKind::TwoCharge: return char_sum_two_charge(n, s);
        case ConstraintKind::Subblock: return char_sum_subblock(n, c.p, c.z, s);
        case ConstraintKind::RllDInf: return char_sum_rll(n, c.d, s);
        case ConstraintKind::OddStrict: return char_sum_odd_strict(n, s);
        case ConstraintKind::OddRelaxed: return char_sum_odd_relaxed(n, s);
        case ConstraintKind::EvenStrict: return char_sum_even(n, s);
        case ConstraintKind::FixedWeight: return char_sum_fixed_weight(n, c.i, s);
        case ConstraintKind::Full: return s.is_zero() ? pow2(n) : BigInt(0);
    }
    return 0;
}

std::vector<BitWord> enumerate_members(const ConstraintSpec& c, int n) {
    c.check(n);
    if (n > kMemberEnumCap)
        throw CapExceeded("member enumeration at n=" + std::to_string(n) + " exceeds cap n<=" +
                          std::to_string(kMemberEnumCap));
    std::vector<BitWord> out;
    const std::uint64_t total = std::uint64_t{1} << n;
    for (std::uint64_t x = 0; x < total; ++x) {
        const BitWord w = BitWord::from_index(n, x);
        if (member(c, w)) out.push_back(w);
    }
    std::sort(out.begin(), out.end(), [](const BitWord& a, const BitWord& b) { return lex_less(a, b); });
    return out;
}

std::vector<char> member_indicator(const ConstraintSpec& c, int n) {
    c.check(n);
    if (n > kMemberEnumCap)
        throw CapExceeded("member enumeration at n=" + std::to_string(n) + " exceeds cap n<=" +
                          std::to_string(kMemberEnumCap));
    std::vector<char> ind(std::size_t{1} << n);
    for (std::size_t x = 0; x < ind.size(); ++x) ind[x] = member(c, BitWord::from_index(n, x));
    return ind;
}

BigInt char_sum_brute(const ConstraintSpec& c, const BitWord& s) {
    BigInt f = 0;
    for (const auto& x : enumerate_members(c, s.size())) f += dot(x, s) ? -1 : 1;
    return f;
}

// ---- orbits ---------------------------------------------------------------

std::vector<int> OrbitStructure::label_of(const BitWord& x) const {
    if (constraint.kind == ConstraintKind::TwoCharge) {
        const int pairs = (n % 2) ? (n - 1) / 2 : (n - 2) / 2;
        int t00 = 0, t11 = 0;
        for (int q = 0; q < pairs; ++q) {
            const bool a = x.get(1 + 2 * q), b = x.get(2 + 2 * q);
            t00 += !a && !b;
            t11 += a && b;
        }
        std::vector<int> l{x.get(0) ? 1 : 0, t00, t11};
        if (n % 2 == 0) l.push_back(x.get(n - 1) ? 1 : 0);
        return l;
    }
    const int len = n / constraint.p;
    std::vector<int> w(constraint.p);
    for (int l = 0; l < constraint.p; ++l)
        for (int i = 0; i < len; ++i) w[l] += x.get(l * len + i);
    std::sort(w.rbegin(), w.rend());
    return w;
}

OrbitStructure orbit_structure(const ConstraintSpec& c, int n) {
    c.check(n);
    OrbitStructure st;
    st.constraint = c;
    st.n = n;
    auto add = [&](std::vector<int> label, BigInt size, BitWord rep) {
        st.index[label] = st.count();
        st.labels.push_back(std::move(label));
        st.sizes.push_back(std::move(size));
        st.reps.push_back(rep);
    };
    if (c.kind == ConstraintKind::TwoCharge) {
        if (n < 3) throw InvalidParameter("2-charge orbits need n >= 3");
        const int pairs = (n % 2) ? (n - 1) / 2 : (n - 2) / 2;
        const int ends = n % 2 ? 1 : 2;  // individually labeled coordinates
        for (int b = 0; b < 2; ++b)
            for (int last = 0; last < (ends == 2 ? 2 : 1); ++last)
                for (int t00 = 0; t00 <= pairs; ++t00)
                    for (int t11 = 0; t00 + t11 <= pairs; ++t11) {
                        BitWord rep(n);
                        if (b) rep.set(0);
                        // pairs in order: t00 copies of 00, t11 of 11, rest 10
                        for (int q = 0; q < pairs; ++q) {
                            const int i = 1 + 2 * q;
                            if (q < t00) continue;
                            if (q < t00 + t11) {
                                rep.set(i);
                                rep.set(i + 1);
                            } else {
                                rep.set(i);
                            }
                        }
                        std::vector<int> label{b, t00, t11};
                        if (ends == 2) {
                            label.push_back(last);
                            if (last) rep.set(n - 1);
                        }
                        BigInt size = binomial(pairs, t00) * binomial(pairs - t00, t11) * pow2(pairs - t00 - t11);
                        add(std::move(label), std::move(size), rep);
                    }
        return st;
    }
    if (c.kind != ConstraintKind::Subblock)
        throw InvalidParameter("orbit structure is only available for 2charge and subblock constraints");
    const int p = c.p, len = n / p;
    // non-increasing tuples alpha in [0:len]^p
    std::vector<int> a(p, len);
    while (true) {
        BitWord rep(n);
        for (int l = 0; l < p; ++l)
            for (int i = 0; i < a[l]; ++i) rep.set(l * len + i);
        // distinct arrangements: p! / prod(mult!)
        BigInt arr = 1;
        for (int i = 2; i <= p; ++i) arr *= i;
        for (std::size_t i = 0; i < a.size();) {
            std::size_t j = i;
            while (j < a.size() && a[j] == a[i]) ++j;
            for (std::size_t f = 2; f <= j - i; ++f) arr /= static_cast<int>(f);
            i = j;
        }
        BigInt size = arr;
        for (int l = 0; l < p; ++l) size *= binomial(len, a[l]);
        add(a, size, rep);
        // next non-increasing tuple in decreasing lexicographic order
        int i = p - 1;
        while (i >= 0 && a[i] == 0) --i;
        if (i < 0) break;
        --a[i];
        for (int j = i + 1; j < p; ++j) a[j] = a[i];
    }
    return st;
}

std::vector<BigInt> orbit_char_sums(const OrbitStructure& st, const BitWord& s_rep) {
    std::vector<BigInt> out(st.count());
    if (st.constraint.kind == ConstraintKind::TwoCharge) {
        if (st.n > kMemberEnumCap)
            throw CapExceeded("2-charge orbit sums enumerate {0,1}^n; n exceeds " + std::to_string(kMemberEnumCap));
        std::vector<std::int64_t> acc(st.count(), 0);
        const std::uint64_t total = std::uint64_t{1} << st.n;
        for (std::uint64_t x = 0; x < total; ++x) {
            const BitWord w = BitWord::from_index(st.n, x);
            acc[st.orbit_of(w)] += dot(w, s_rep) ? -1 : 1;
        }
        for (int o = 0; o < st.count(); ++o) out[o] = acc[o];
        return out;
    }
    for (int o = 0; o < st.count(); ++o) out[o] = orbit_char_sum(st, o, s_rep);
    return out;
}

BigInt orbit_char_sum(const OrbitStructure& st, int orbit, const BitWord& s_rep) {
    if (orbit < 0 || orbit >= st.count()) throw InvalidParameter("orbit index out of range");
    if (st.constraint.kind == ConstraintKind::TwoCharge) return orbit_char_sums(st, s_rep)[orbit];
    const int p = st.constraint.p, len = st.n / p;
    const auto& k = krawtchouk_table(len);
    std::vector<int> sw(p);
    for (int l = 0; l < p; ++l)
        for (int i = 0; i < len; ++i) sw[l] += s_rep.get(l * len + i);
    // sum over distinct orderings beta of the multiset alpha
    std::vector<int> beta = st.labels[orbit];
    std::sort(beta.begin(), beta.end());
    BigInt total = 0;
    do {
        BigInt prod = 1;
        for (int l = 0; l < p && prod != 0; ++l) prod *= k[beta[l]][sw[l]];
        total += prod;
    } while (std::next_permutation(beta.begin(), beta.end()));
    return total;
}

std::vector<std::vector<int>> orbit_generators(const ConstraintSpec& c, int n) {
    c.check(n);
    std::vector<std::vector<int>> gens;
    auto ident = [n] {
        std::vector<int> p(n);
        std::iota(p.begin(), p.end(), 0);
        return p;
    };
    if (c.kind == ConstraintKind::TwoCharge) {
        const int pairs = (n % 2) ? (n - 1) / 2 : (n - 2) / 2;
        for (int q = 0; q < pairs; ++q) {
            auto p = ident();
            std::swap(p[1 + 2 * q], p[2 + 2 * q]);
            gens.push_back(p);
        }
        for (int q = 0; q < pairs; ++q)
            for (int r = q + 1; r < pairs; ++r) {
                auto p = ident();
                std::swap(p[1 + 2 * q], p[1 + 2 * r]);
                std::swap(p[2 + 2 * q], p[2 + 2 * r]);
                gens.push_back(p);
            }
        return gens;
    }
    if (c.kind != ConstraintKind::Subblock)
        throw InvalidParameter("orbit generators are only available for 2charge and subblock constraints");
    const int len = n / c.p;
    for (int l = 0; l < c.p; ++l)
        for (int i = 0; i + 1 < len; ++i) {
            auto p = ident();
            std::swap(p[l * len + i], p[l * len + i + 1]);
            gens.push_back(p);
        }
    for (int l = 0; l + 1 < c.p; ++l) {
        auto p = ident();
        for (int i = 0; i < len; ++i) std::swap(p[l * len + i], p[(l + 1) * len + i]);
        gens.push_back(p);
    }
    return gens;
}

BitWord permute(const BitWord& x, const std::vector<int>& perm) {
    BitWord y(x.size());
    for (int i = 0; i < x.size(); ++i)
        if (x.get(i)) y.set(perm[i]);
    return y;
}

}  // namespace ccode

#include "ccode/counting.hpp"

namespace ccode {

namespace {

BigInt pow2(int e) {
    if (e < 0) throw ConsistencyError("negative power of two in an integer count");
    return BigInt(1) << e;
}

BigInt sum_binomials_upto(int m, int r) {
    BigInt s = 0;
    for (int i = 0; i <= r; ++i) s += binomial(m, i);
    return s;
}

}  // namespace

std::string to_string(CountMethod m) {
    switch (m) {
        case CountMethod::Auto: return "auto";
        case CountMethod::DualSum: return "dual_sum";
        case CountMethod::Direct: return "direct_membership";
        case CountMethod::Brute: return "brute";
    }
    return "?";
}

CountMethod parse_count_method(const std::string& s) {
    if (s == "auto") return CountMethod::Auto;
    if (s == "dual") return CountMethod::DualSum;
    if (s == "direct") return CountMethod::Direct;
    if (s == "brute") return CountMethod::Brute;
    throw ParseError("unknown method '" + s + "' (expected auto|dual|direct|brute)");
}

CountResult count_in_code(const BinaryLinearCode& code, const ConstraintSpec& a, CountMethod method, int cap) {
    const int n = code.n(), k = code.k();
    a.check(n);
    if (method == CountMethod::Auto) {
        method = (n - k < k) ? CountMethod::DualSum : CountMethod::Direct;
        if (method == CountMethod::DualSum && n - k > cap && k <= cap) method = CountMethod::Direct;
        if (method == CountMethod::Direct && k > cap && n - k <= cap) method = CountMethod::DualSum;
        if (k > cap && n - k > cap)
            throw CapExceeded("both the code (k=" + std::to_string(k) + ") and its dual (n-k=" +
                              std::to_string(n - k) + ") exceed the enumeration cap 2^" + std::to_string(cap));
    }
    CountResult res;
    res.method = method;
    if (method == CountMethod::DualSum) {
        BigInt sum = 0;
        for_each_in_span(code.parity_check().row_words(), n, [&](const BitWord& s) { sum += char_sum(a, s); },
                         cap);
        res.value = exact_div(sum, pow2(n - k), "dual character sum");
        res.dual_dimension_used = n - k;
    } else if (method == CountMethod::Direct) {
        std::uint64_t c = 0;
        for_each_in_span(code.generator().row_words(), n, [&](const BitWord& x) { c += member(a, x); }, cap);
        res.value = c;
    } else {
        res.value = count_brute(code, a);
    }
    return res;
}

BigInt count_brute(const BinaryLinearCode& code, const ConstraintSpec& a) {
    std::uint64_t c = 0;
    for (const auto& x : enumerate_codewords(code, 24)) c += member(a, x);
    return c;
}

BigInt WeightDistribution::total() const {
    BigInt t = 0;
    for (const auto& c : counts) t += c;
    return t;
}

WeightDistribution weight_distribution(const ConstraintSpec& a, int n) {
    a.check(n);
    if (n > kMemberEnumCap)
        throw CapExceeded("weight distribution sums over 2^" + std::to_string(n) + " words; cap is n<=" +
                          std::to_string(kMemberEnumCap));
    const auto w = weight_class_sums([&](const BitWord& s) { return char_sum(a, s); }, n);
    const auto& kt = krawtchouk_table(n);
    WeightDistribution out{n, std::vector<BigInt>(n + 1)};
    for (int i = 0; i <= n; ++i) {
        BigInt acc = 0;
        for (int j = 0; j <= n; ++j) acc += kt[i][j] * w[j];
        out.counts[i] = exact_div(acc, pow2(n), "weight distribution");
    }
    return out;
}

WeightDistribution constrained_weight_distribution(const BinaryLinearCode& code, const ConstraintSpec& a) {
    const int n = code.n(), k = code.k();
    a.check(n);
    if (n > 18 || n - k > 14)
        throw CapExceeded("constrained weight distribution needs n <= 18 and n-k <= 14");
    const std::size_t total = std::size_t{1} << n;
    std::vector<std::int64_t> f(total);
    for (std::size_t s = 0; s < total; ++s)
        f[s] = char_sum(a, BitWord::from_index(n, s)).convert_to<std::int64_t>();
    // T is constant on cosets of the dual; fill one coset at a time
    std::vector<std::uint64_t> dual;
    for_each_in_span(code.parity_check().row_words(), n, [&](const BitWord& u) { dual.push_back(u.index()); });
    std::vector<std::int64_t> t(total);
    std::vector<char> seen(total, 0);
    for (std::size_t s = 0; s < total; ++s) {
        if (seen[s]) continue;
        std::int64_t acc = 0;
        for (auto u : dual) acc += f[s ^ u];
        for (auto u : dual) {
            t[s ^ u] = acc;
            seen[s ^ u] = 1;
        }
    }
    std::vector<BigInt> u(n + 1);
    for (std::size_t s = 0; s < total; ++s) u[std::popcount(s)] += t[s];
    const auto& kt = krawtchouk_table(n);
    WeightDistribution out{n, std::vector<BigInt>(n + 1)};
    for (int i = 0; i <= n; ++i) {
        BigInt acc = 0;
        for (int j = 0; j <= n; ++j) acc += kt[i][j] * u[j];
        // |C| / 4^n
        out.counts[i] = exact_div(acc, pow2(2 * n - k), "constrained weight distribution");
    }
    return out;
}

WeightDistribution code_weight_distribution(const BinaryLinearCode& code, int cap) {
    const auto h = weight_histogram(code, cap);
    WeightDistribution w{code.n(), {}};
    for (auto c : h) w.counts.push_back(c);
    return w;
}

WeightDistribution macwilliams(const WeightDistribution& w, const BigInt& code_size) {
    const int n = w.n;
    const auto& kt = krawtchouk_table(n);
    WeightDistribution out{n, std::vector<BigInt>(n + 1)};
    for (int i = 0; i <= n; ++i) {
        BigInt acc = 0;
        for (int j = 0; j <= n; ++j) acc += kt[i][j] * w.counts[j];
        out.counts[i] = exact_div(acc, code_size, "MacWilliams transform (input is not a linear code?)");
    }
    return out;
}

TwoChargeReport two_charge_structure(const BinaryLinearCode& code) {
    const int n = code.n(), k = code.k();
    if (n - k > 24) throw CapExceeded("two_charge_structure needs n-k <= 24");
    if (n < 3) throw InvalidParameter("2-charge analysis needs n >= 3");
    const auto basis = two_charge_basis(n);
    const int nb = static_cast<int>(basis.size());
    // a in {0,1}^|B| with sum a_i b_i in C-dual  <=>  M a = 0, M[r][i] = <g_r, b_i>
    std::vector<BitWord> m_rows;
    for (const auto& g : code.generator().row_words()) {
        BitWord row(nb);
        for (int i = 0; i < nb; ++i)
            if (dot(g, basis[i])) row.set(i);
        m_rows.push_back(row);
    }
    const auto kernel = null_space(m_rows, nb);
    TwoChargeReport rep;
    rep.t = static_cast<int>(kernel.size());
    // the sign (-1)^{w(a)-a_0} is a character of the kernel
    rep.criterion_c_holds = true;
    for (const auto& a : kernel) {
        int odd = 0;
        for (int i = 1; i < nb; ++i) odd ^= a.get(i);
        if (odd) rep.criterion_c_holds = false;
    }
    rep.predicted_count = rep.criterion_c_holds ? pow2(k + rep.t + n / 2 - n) : BigInt(0);
    return rep;
}

double hamming_odd_strict_printed_formula(int m) {
    const int e = ((1 << m) - 1) / 2 - m;
    return std::ldexp(1.0, e);
}

OddCountReport count_odd_in_code(const NamedCode& nc, const ConstraintSpec& a) {
    if (a.kind != ConstraintKind::OddStrict && a.kind != ConstraintKind::OddRelaxed)
        throw InvalidParameter("count_odd_in_code expects the odd-strict or odd constraint");
    OddCountReport rep;
    rep.count = count_in_code(nc.code, a).value;
    const int m = nc.family.m, r = nc.family.r;
    if (nc.family.kind == CodeFamily::Hamming && a.kind == ConstraintKind::OddStrict) {
        rep.predicted = pow2(((1 << m) - 1) / 2 - m + 1);
        rep.formula = "2^(floor((2^m-1)/2)-m+1)";
    } else if (nc.family.kind == CodeFamily::ReedMuller && a.kind == ConstraintKind::OddRelaxed) {
        const BigInt e = r >= 1 ? sum_binomials_upto(m - 1, r - 1) : BigInt(0);
        rep.predicted = pow2(e.convert_to<int>() + 1) - 1;
        rep.formula = "2^(C(m-1,<=r-1)+1)-1";
    } else if (nc.family.kind == CodeFamily::ReedMuller && a.kind == ConstraintKind::OddStrict) {
        rep.predicted = 1;  // even blocklength: only the all-zeros word
        rep.formula = "1";
    }
    return rep;
}

PlotkinCounts rm_subblock_count_plotkin(int m, int r, int z) {
    if (m < 1 || m > 6) throw InvalidParameter("Plotkin coset counting supports 1 <= m <= 6");
    if (r < 1 || r > m - 1) throw InvalidParameter("Plotkin coset counting needs 1 <= r <= m-1");
    const int half = 1 << (m - 1);
    if (z < 0 || z > half) throw InvalidParameter("z outside [0, 2^(m-1)]");
    auto rm_or_zero = [&](int mm, int rr) { return rr < 0 ? zero_code(1 << mm) : reed_muller(mm, rr); };

    PlotkinCounts out;
    {
        const auto sup = reed_muller(m - 1, r);
        const auto sub = rm_or_zero(m - 1, r - 1);
        const auto dec = coset_decompose(sup, sub);
        BigInt acc = 0;
        for (const auto& u : dec.reps) {
            const auto a = coset_weight_enumerator(u, sub);
            acc += BigInt(a[z]) * a[z];
        }
        out.count_primal = acc;
    }
    {
        const auto sup = reed_muller(m - 1, m - r - 1);
        const auto sub = rm_or_zero(m - 1, m - r - 2);
        const auto dec = coset_decompose(sup, sub);
        const auto& kt = krawtchouk_table(half);
        BigInt acc = 0;
        for (const auto& u : dec.reps) {
            const auto a = coset_weight_enumerator(u, sub);
            BigInt inner = 0;
            for (int j = 0; j <= half; ++j) inner += kt[z][j] * a[j];
            acc += inner * inner;
        }
        const int n = 1 << m;
        const int k = sum_binomials_upto(m, r).convert_to<int>();
        out.count_dual = exact_div(acc, pow2(n - k), "dual coset sum");
    }
    return out;
}

}  // namespace ccode

#include "ccode/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <random>
#include <sstream>

#include "ccode/bounds.hpp"
#include "ccode/codes.hpp"
#include "ccode/constraints.hpp"
#include "ccode/counting.hpp"
#include "ccode/errors.hpp"
#include "ccode/spectral.hpp"

namespace ccode {
namespace {

struct SuiteFailure {
    std::string what;
};

// Records checks and stops the suite at the first failure.
class Checker {
public:
    explicit Checker(bool inject) : inject_(inject) {}

    long checks() const { return checks_; }

    void holds(bool ok, const std::function<std::string()>& where) {
        const bool tampered = inject_ && checks_ == 0;
        ++checks_;
        if (tampered) throw SuiteFailure{where() + " (injected fault: check forced to fail)"};
        if (!ok) throw SuiteFailure{where()};
    }

    template <class A, class B>
    void equal(const A& got, const B& want, const std::function<std::string()>& where) {
        holds(got == want, [&] {
            std::ostringstream os;
            os << where() << ": got " << got << ", expected " << want;
            return os.str();
        });
    }

    void close(double got, double want, double tol, const std::function<std::string()>& where) {
        holds(std::abs(got - want) <= tol, [&] {
            std::ostringstream os;
            os.precision(12);
            os << where() << ": got " << got << ", expected " << want << " (tol " << tol << ")";
            return os.str();
        });
    }

private:
    bool inject_;
    long checks_ = 0;
};

std::string seq(const std::vector<BigInt>& v) {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    os << ')';
    return os.str();
}

std::vector<ConstraintSpec> constraints_for(int n) {
    std::vector<ConstraintSpec> out{ConstraintSpec::full()};
    if (n >= 3) out.push_back(ConstraintSpec::two_charge());
    for (int p = 1; p <= std::min(n, 6); ++p) {
        if (n % p) continue;
        for (int z = 0; z <= n / p; ++z) out.push_back(ConstraintSpec::subblock(p, z));
    }
    for (int d = 1; d <= 3; ++d) out.push_back(ConstraintSpec::rll(d));
    out.push_back(ConstraintSpec::odd_strict());
    if (n % 2 == 0) out.push_back(ConstraintSpec::odd_relaxed());
    out.push_back(ConstraintSpec::even_strict());
    for (int i = 0; i <= n; ++i) out.push_back(ConstraintSpec::fixed_weight(i));
    return out;
}

BinaryLinearCode random_code(int n, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> kd(1, n - 1);
    const int k = kd(rng);
    std::vector<BitWord> rows;
    while (static_cast<int>(rows.size()) < k) {
        BitWord w = BitWord::from_index(n, rng());
        if (w.is_zero()) continue;
        std::vector<BitWord> trial = rows;
        trial.push_back(w);
        if (gf2_rank(BitMatrix(n, trial)) == static_cast<int>(trial.size())) rows = std::move(trial);
    }
    return BinaryLinearCode::from_generator(n, rows);
}

std::string describe(const BinaryLinearCode& c) {
    std::ostringstream os;
    os << "[" << c.n() << "," << c.k() << "] code with generator";
    for (const auto& r : c.generator().row_words()) os << ' ' << r.str();
    return os.str();
}

// (a) closed-form character sums against the transform of the membership indicator.
void suite_charsum(Checker& ck, const VerifyOptions& opt) {
    const int top = std::min(12, opt.max_n);
    for (int n = 1; n <= top; ++n) {
        for (const auto& c : constraints_for(n)) {
            const auto ind = member_indicator(c, n);
            std::vector<std::int64_t> brute(ind.begin(), ind.end());
            wht_inplace(brute);
            const std::uint64_t size = std::uint64_t{1} << n;
            for (std::uint64_t s = 0; s < size; ++s) {
                const BitWord w = BitWord::from_index(n, s);
                ck.equal(char_sum(c, w), BigInt(brute[s]), [&] {
                    return "char_sum " + to_string(c) + " n=" + std::to_string(n) + " s=" + w.str();
                });
            }
            ck.equal(cardinality(c, n), BigInt(brute[0]),
                     [&] { return "cardinality " + to_string(c) + " n=" + std::to_string(n); });
        }
    }
}

// (b) divisibility of dual-side sums and agreement with brute counts on random codes.
void suite_dual_sum(Checker& ck, const VerifyOptions& opt) {
    std::mt19937_64 rng(opt.seed);
    const int top = std::min(13, opt.max_n);
    for (int n = 7; n <= top; ++n) {
        std::vector<ConstraintSpec> cs{ConstraintSpec::two_charge(), ConstraintSpec::rll(1), ConstraintSpec::rll(2),
                                       ConstraintSpec::even_strict(), ConstraintSpec::odd_strict(),
                                       ConstraintSpec::fixed_weight(n / 2)};
        if (n % 2 == 0) cs.push_back(ConstraintSpec::odd_relaxed());
        for (int p : {2, 3}) if (n % p == 0) cs.push_back(ConstraintSpec::subblock(p, n / p / 2));
        for (int trial = 0; trial < 50; ++trial) {
            const auto code = random_code(n, rng);
            const auto dual_words = enumerate_codewords(dual_code(code));
            const BigInt dual_size = BigInt(1) << (n - code.k());
            for (const auto& c : cs) {
                auto where = [&] { return to_string(c) + " in " + describe(code); };
                BigInt sum = 0;
                for (const auto& s : dual_words) sum += char_sum(c, s);
                ck.equal(BigInt(sum % dual_size), BigInt(0), [&] { return "dual sum divisibility, " + where(); });
                const BigInt brute = count_brute(code, c);
                ck.equal(BigInt(sum / dual_size), brute, [&] { return "dual-sum count, " + where(); });
                ck.equal(count_in_code(code, c).value, brute, [&] { return "count_in_code, " + where(); });
            }
            if (n % 2 == 1) {
                const auto rep = two_charge_structure(code);
                ck.equal(rep.predicted_count, count_brute(code, ConstraintSpec::two_charge()),
                         [&] { return "two-charge structural prediction, " + describe(code); });
            }
        }
    }
}

// (c) exact Fourier identities.
void suite_fourier(Checker& ck, const VerifyOptions& opt) {
    std::mt19937_64 rng(opt.seed + 1);
    std::uniform_int_distribution<int> val(-5, 5);
    for (int n = 1; n <= std::min(10, opt.max_n); ++n) {
        const std::size_t size = std::size_t{1} << n;
        std::vector<std::int64_t> f(size), g(size);
        for (auto& x : f) x = val(rng);
        for (auto& x : g) x = val(rng);
        const auto hf = wht(f), hg = wht(g);
        BigInt lhs = 0, rhs = 0;
        for (std::size_t i = 0; i < size; ++i) {
            lhs += BigInt(f[i]) * g[i];
            rhs += BigInt(hf[i]) * hg[i];
        }
        ck.equal(BigInt(lhs * (BigInt(1) << n)), rhs, [&] { return "Plancherel n=" + std::to_string(n); });
        const auto back = wht(hf);
        for (std::size_t i = 0; i < size; ++i)
            ck.equal(back[i], f[i] << n, [&] { return "transform involution n=" + std::to_string(n) + " index " + std::to_string(i); });
        // weight-class indicators transform to Krawtchouk values
        for (int i = 0; i <= n; ++i) {
            std::vector<std::int64_t> ind(size);
            for (std::size_t x = 0; x < size; ++x) ind[x] = std::popcount(x) == i;
            wht_inplace(ind);
            for (std::size_t s = 0; s < size; ++s)
                ck.equal(BigInt(ind[s]), krawtchouk(n, i, std::popcount(s)), [&] {
                    return "weight-class transform n=" + std::to_string(n) + " i=" + std::to_string(i) + " s=" +
                           BitWord::from_index(n, s).str();
                });
        }
    }
    for (int n = 1; n <= std::min(12, opt.max_n); ++n) {
        const auto& k = krawtchouk_table(n);
        for (int i = 0; i <= n; ++i) {
            ck.equal(k[i][0], binomial(n, i), [&] { return "K_i(0) n=" + std::to_string(n); });
            ck.equal(k[0][i], BigInt(1), [&] { return "K_0(j) n=" + std::to_string(n); });
            for (int l = 0; l <= n; ++l) {
                auto where = [&] { return "n=" + std::to_string(n) + " i=" + std::to_string(i) + " l=" + std::to_string(l); };
                BigInt acc = 0;
                for (int j = 0; j <= n; ++j) acc += binomial(n, j) * k[i][j] * k[l][j];
                const BigInt want = i == l ? BigInt(binomial(n, i) << n) : BigInt(0);
                ck.equal(acc, want, [&] { return "Krawtchouk orthogonality " + where(); });
                ck.equal(BigInt(binomial(n, l) * k[i][l]), BigInt(binomial(n, i) * k[l][i]),
                         [&] { return "Krawtchouk reciprocity " + where(); });
                ck.equal(k[i][l], krawtchouk_sum(n, i, l), [&] { return "Krawtchouk table vs sum " + where(); });
            }
        }
        // Boolean Parseval for every constraint
        for (const auto& c : constraints_for(n)) {
            BigInt acc = 0;
            for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
                const BigInt f = char_sum(c, BitWord::from_index(n, s));
                acc += f * f;
            }
            ck.equal(acc, BigInt(cardinality(c, n) << n),
                     [&] { return "Parseval " + to_string(c) + " n=" + std::to_string(n); });
        }
        // two-charge spectrum is supported on span(B) with values +-2^{floor(n/2)}
        if (n >= 3) {
            const auto basis = echelon(two_charge_basis(n), n);
            const BigInt mag = BigInt(1) << (n / 2);
            for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
                const BitWord w = BitWord::from_index(n, s);
                const BigInt f = char_sum_two_charge(n, w);
                const bool ok = basis.in_span(w) ? (f == mag || f == -mag) : f == 0;
                ck.holds(ok, [&] { return "two-charge spectrum shape n=" + std::to_string(n) + " s=" + w.str(); });
            }
        }
    }
    // orbit sums over all orbits recover the transform of the all-ones function
    for (int n = 3; n <= std::min(10, opt.max_n); ++n) {
        std::vector<ConstraintSpec> cs{ConstraintSpec::two_charge()};
        for (int p : {2, 3}) if (n % p == 0) cs.push_back(ConstraintSpec::subblock(p, 1));
        for (const auto& c : cs) {
            const auto st = orbit_structure(c, n);
            for (int o = 0; o < st.count(); ++o) {
                const auto sums = orbit_char_sums(st, st.reps[o]);
                BigInt acc = 0;
                for (const auto& v : sums) acc += v;
                const BigInt want = st.reps[o].is_zero() ? BigInt(BigInt(1) << n) : BigInt(0);
                ck.equal(acc, want, [&] {
                    return "orbit sums " + to_string(c) + " n=" + std::to_string(n) + " s=" + st.reps[o].str();
                });
            }
        }
    }
}

// (d) symmetrized against full LPs, plus monotonicity and the proposition bounds.
void suite_sym_lp(Checker& ck, const VerifyOptions& opt) {
    const int top = std::min(10, opt.max_n);
    for (int n = 2; n <= std::min(8, top); ++n)
        for (int d = 1; d <= n; ++d) {
            const double a = del_classic(n, d).lp_value, b = del_full(n, d).lp_value;
            ck.close(a, b, 1e-5 * std::max(1.0, b),
                     [&] { return "classic vs full Delsarte n=" + std::to_string(n) + " d=" + std::to_string(d); });
        }
    struct Case {
        int n;
        ConstraintSpec c;
    };
    const std::vector<Case> cases{{9, ConstraintSpec::two_charge()},
                                  {8, ConstraintSpec::subblock(2, 1)},
                                  {10, ConstraintSpec::subblock(2, 1)}};
    for (const auto& cs : cases) {
        if (cs.n > top) continue;
        const double size = cardinality(cs.c, cs.n).convert_to<double>();
        double prev = kInf;
        for (int d = 1; d <= cs.n; ++d) {
            auto where = [&] { return to_string(cs.c) + " n=" + std::to_string(cs.n) + " d=" + std::to_string(d); };
            const auto sym = del_constrained_sym(cs.n, d, cs.c);
            const auto full = del_constrained(cs.n, d, cs.c);
            ck.close(sym.lp_value, full.lp_value, 1e-5 * std::max(1.0, full.lp_value),
                     [&] { return "symmetrized vs full LP, " + where(); });
            ck.holds(full.lp_value <= prev + 1e-6, [&] { return "monotone in d, " + where(); });
            prev = full.lp_value;
            const double del = del_classic(cs.n, d).lp_value;
            ck.holds(full.code_size_bound <= size + 1e-6 && full.code_size_bound <= del + 1e-6,
                     [&] { return "bound exceeds |A| or Del(n,d), " + where(); });
        }
    }
}

// (e) the two Reed-Muller coset routes against the transform count.
void suite_plotkin(Checker& ck, const VerifyOptions& opt) {
    const std::vector<std::pair<int, int>> params{{3, 1}, {4, 2}, {4, 3}, {5, 3}};
    for (auto [m, r] : params) {
        if ((1 << m) > opt.max_n) continue;
        const auto code = reed_muller(m, r);
        for (int z = 0; z <= (1 << (m - 1)); ++z) {
            auto where = [&] {
                return "RM(" + std::to_string(m) + "," + std::to_string(r) + ") subblock:p=2,z=" + std::to_string(z);
            };
            const auto pc = rm_subblock_count_plotkin(m, r, z);
            const BigInt direct = count_in_code(code, ConstraintSpec::subblock(2, z)).value;
            ck.equal(pc.count_primal, direct, [&] { return "coset sum route, " + where(); });
            ck.equal(pc.count_dual, direct, [&] { return "dual coset route, " + where(); });
            if (code.k() <= 20)
                ck.equal(count_brute(code, ConstraintSpec::subblock(2, z)), direct, [&] { return "brute, " + where(); });
        }
    }
}

// (f) MacWilliams on constructed codes.
void suite_macwilliams(Checker& ck, const VerifyOptions& opt) {
    std::vector<std::pair<std::string, BinaryLinearCode>> codes;
    for (int m = 2; m <= 4; ++m) {
        codes.emplace_back("hamming:m=" + std::to_string(m), hamming_code(m));
        codes.emplace_back("simplex:m=" + std::to_string(m), simplex_code(m));
    }
    for (int m = 1; m <= 3; ++m)
        for (int r = 0; r <= m; ++r)
            codes.emplace_back("rm:m=" + std::to_string(m) + ",r=" + std::to_string(r), reed_muller(m, r));
    for (int n : {1, 5, 10, 15}) {
        codes.emplace_back("whole space n=" + std::to_string(n), whole_space(n));
        codes.emplace_back("zero code n=" + std::to_string(n), zero_code(n));
    }
    std::mt19937_64 rng(opt.seed + 2);
    for (int n = 2; n <= 15; ++n) codes.emplace_back("random n=" + std::to_string(n), random_code(n, rng));
    for (const auto& [label, code] : codes) {
        if (code.n() > std::min(15, opt.max_n)) continue;
        const auto dual = dual_code(code);
        const auto wc = code_weight_distribution(code);
        const auto wd = code_weight_distribution(dual);
        const auto mw = macwilliams(wc, BigInt(1) << code.k());
        ck.equal(seq(mw.counts), seq(wd.counts), [&] { return "MacWilliams of " + label; });
        const auto back = macwilliams(mw, BigInt(1) << dual.k());
        ck.equal(seq(back.counts), seq(wc.counts), [&] { return "MacWilliams round trip of " + label; });
    }
}

using SuiteFn = void (*)(Checker&, const VerifyOptions&);

SuiteFn lookup(const std::string& name) {
    if (name == "charsum") return suite_charsum;
    if (name == "dual-sum") return suite_dual_sum;
    if (name == "fourier") return suite_fourier;
    if (name == "sym-lp") return suite_sym_lp;
    if (name == "plotkin") return suite_plotkin;
    if (name == "macwilliams") return suite_macwilliams;
    throw InvalidParameter("unknown verify suite '" + name + "'");
}

}  // namespace

const std::vector<std::string>& verify_suite_names() {
    static const std::vector<std::string> names{"charsum", "dual-sum", "fourier", "sym-lp", "plotkin", "macwilliams"};
    return names;
}

SuiteResult run_verify_suite(const std::string& name, const VerifyOptions& opt) {
    const SuiteFn fn = lookup(name);
    SuiteResult res;
    res.name = name;
    Checker ck(opt.inject_fault);
    const auto t0 = std::chrono::steady_clock::now();
    try {
        fn(ck, opt);
    } catch (const SuiteFailure& f) {
        res.passed = false;
        res.counterexample = f.what;
    } catch (const std::exception& e) {
        res.passed = false;
        res.counterexample = std::string("exception: ") + e.what();
    }
    res.checks = ck.checks();
    res.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return res;
}

std::vector<SuiteResult> run_verify(const VerifyOptions& opt) {
    const auto& names = opt.suites.empty() ? verify_suite_names() : opt.suites;
    for (const auto& n : names) lookup(n);
    std::vector<SuiteResult> out;
    for (const auto& n : names) out.push_back(run_verify_suite(n, opt));
    return out;
}

}  // namespace ccode

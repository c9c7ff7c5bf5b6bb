#include "ccode/bounds.hpp"

#include <algorithm>
#include <cmath>

#include "ccode/errors.hpp"
#include "ccode/spectral.hpp"

namespace ccode {

namespace {

void check_nd(int n, int d) {
    if (n < 1) throw InvalidParameter("n must be positive");
    if (d < 1 || d > n) throw InvalidParameter("d must satisfy 1 <= d <= n");
}

BoundReport finish(BoundReport rep, const LpModel& model, const BoundOptions& opt, bool take_sqrt) {
    if (!opt.dump_path.empty()) write_lp_dump(model, opt.dump_path);
    const auto sol = solve(model, opt.lp);
    rep.status = sol.status;
    rep.iterations = sol.iterations;
    rep.lp_rows = sol.rows_used;
    rep.lp_cols = sol.cols_used;
    if (sol.status == LpStatus::Optimal) {
        rep.lp_value = sol.value;
        rep.code_size_bound = take_sqrt ? std::sqrt(std::max(0.0, sol.value)) : sol.value;
    } else {
        rep.lp_value = rep.code_size_bound = std::nan("");
    }
    return rep;
}

double del_value(int n, int d, const BoundOptions& opt) {
    const auto rep = del_classic(n, d, BoundOptions{opt.lp, {}});
    if (rep.status != LpStatus::Optimal)
        throw SolverLimit("Del(" + std::to_string(n) + "," + std::to_string(d) + ") ended with status " +
                          to_string(rep.status));
    return rep.lp_value;
}

// Ball of radius t around x, as word indices.
void ball(std::uint64_t x, int n, int t, std::vector<std::uint64_t>& out) {
    out.clear();
    out.push_back(x);
    std::vector<int> pos;
    auto rec = [&](auto&& self, int start, std::uint64_t y, int left) -> void {
        if (left == 0) return;
        for (int i = start; i < n; ++i) {
            const std::uint64_t z = y ^ (std::uint64_t{1} << i);
            out.push_back(z);
            self(self, i + 1, z, left - 1);
        }
    };
    rec(rec, 0, x, t);
}

}  // namespace

LpModel del_classic_model(int n, int d) {
    check_nd(n, d);
    const auto kt = krawtchouk_table_double(n);
    LpModel m(n + 1, Sense::Maximize);
    for (int j = 0; j <= n; ++j) m.objective[j] = 1.0;
    m.fix(0, 1.0);
    for (int j = 1; j < d; ++j) m.fix(j, 0.0);
    for (int k = 0; k <= n; ++k) m.add_row(kt[k], Relation::Ge, 0.0);
    return m;
}

BoundReport del_classic(int n, int d, const BoundOptions& opt) {
    BoundReport rep;
    rep.n = n;
    rep.d = d;
    rep.program = "del";
    return finish(rep, del_classic_model(n, d), opt, false);
}

LpModel del_full_model(int n, int d) {
    check_nd(n, d);
    if (n > 12) throw CapExceeded("the per-word Delsarte program is limited to n <= 12");
    const int size = 1 << n;
    LpModel m(size, Sense::Maximize);
    for (int x = 0; x < size; ++x) {
        m.objective[x] = 1.0;
        const int w = std::popcount(static_cast<unsigned>(x));
        if (w >= 1 && w < d) m.fix(x, 0.0);
    }
    m.fix(0, 1.0);
    for (int s = 0; s < size; ++s) {
        std::vector<double> row(size);
        for (int x = 0; x < size; ++x) row[x] = std::popcount(static_cast<unsigned>(x & s)) & 1 ? -1.0 : 1.0;
        m.add_row(std::move(row), Relation::Ge, 0.0);
    }
    return m;
}

BoundReport del_full(int n, int d, const BoundOptions& opt) {
    BoundReport rep;
    rep.n = n;
    rep.d = d;
    rep.program = "del-full";
    return finish(rep, del_full_model(n, d), opt, false);
}

LpModel del_constrained_model(int n, int d, const ConstraintSpec& a, double del) {
    check_nd(n, d);
    a.check(n);
    if (n > 12) throw CapExceeded("the per-word constrained program is limited to n <= 12; use the symmetrized form");
    const int size = 1 << n;
    const auto conv = self_convolution_counts(member_indicator(a, n), n);
    LpModel m(size, Sense::Maximize);
    for (int x = 0; x < size; ++x) {
        m.objective[x] = 1.0;
        const int w = std::popcount(static_cast<unsigned>(x));
        if ((w >= 1 && w < d) || conv[x] == 0) m.fix(x, 0.0);
        else m.upper[x] = static_cast<double>(conv[x]);
    }
    if (conv[0] > 0) m.upper[0] = std::min(del, static_cast<double>(conv[0]));
    for (int s = 0; s < size; ++s) {
        std::vector<double> row(size, 0.0);
        for (int x = 0; x < size; ++x)
            if (conv[x] != 0) row[x] = std::popcount(static_cast<unsigned>(x & s)) & 1 ? -1.0 : 1.0;
        m.add_row(std::move(row), Relation::Ge, 0.0);
    }
    return m;
}

BoundReport del_constrained(int n, int d, const ConstraintSpec& a, const BoundOptions& opt) {
    BoundReport rep;
    rep.n = n;
    rep.d = d;
    rep.constraint = a;
    rep.program = "del-constrained";
    return finish(rep, del_constrained_model(n, d, a, del_value(n, d, opt)), opt, true);
}

LpModel del_constrained_sym_model(int n, int d, const ConstraintSpec& a, double del) {
    check_nd(n, d);
    if (!a.has_orbits()) throw InvalidParameter("the symmetrized program needs the 2-charge or subblock constraint");
    const auto st = orbit_structure(a, n);
    const auto conv = self_convolution_counts(member_indicator(a, n), n);
    const int no = st.count();
    LpModel m(no, Sense::Maximize);
    int zero_orbit = -1;
    for (int o = 0; o < no; ++o) {
        const auto& rep = st.reps[o];
        m.objective[o] = st.sizes[o].convert_to<double>();
        const int w = rep.weight();
        const auto c = conv[rep.index()];
        if (w == 0) zero_orbit = o;
        if ((w >= 1 && w < d) || c == 0) m.fix(o, 0.0);
        else m.upper[o] = static_cast<double>(c);
    }
    if (zero_orbit >= 0 && m.upper[zero_orbit] != 0.0)
        m.upper[zero_orbit] = std::min(del, m.upper[zero_orbit]);
    for (int q = 0; q < no; ++q) {
        const auto sums = orbit_char_sums(st, st.reps[q]);
        std::vector<double> row(no);
        for (int o = 0; o < no; ++o) row[o] = sums[o].convert_to<double>();
        m.add_row(std::move(row), Relation::Ge, 0.0);
    }
    return m;
}

BoundReport del_constrained_sym(int n, int d, const ConstraintSpec& a, const BoundOptions& opt) {
    BoundReport rep;
    rep.n = n;
    rep.d = d;
    rep.constraint = a;
    rep.program = "del-sym";
    return finish(rep, del_constrained_sym_model(n, d, a, del_value(n, d, opt)), opt, true);
}

BoundReport gensph(int n, int d, const ConstraintSpec& a, const BoundOptions& opt) {
    check_nd(n, d);
    a.check(n);
    if (n > 16) throw CapExceeded("GenSph enumerates balls in {0,1}^n and is limited to n <= 16");
    BoundReport rep;
    rep.n = n;
    rep.d = d;
    rep.constraint = a;
    rep.program = "gensph";
    const auto members = enumerate_members(a, n);
    const int na = static_cast<int>(members.size());
    const int t = (d - 1) / 2;
    if (t == 0 || na == 0) {
        // every ball is a single word, which only covers itself
        rep.lp_value = rep.code_size_bound = na;
        rep.lp_rows = rep.lp_cols = na;
        return rep;
    }
    // support of column y: the words of A within distance t of y
    std::vector<int> col_of(std::size_t{1} << n, -1);
    std::vector<std::vector<int>> support;
    std::vector<std::uint64_t> buf;
    for (int r = 0; r < na; ++r) {
        ball(members[r].index(), n, t, buf);
        for (auto y : buf) {
            if (col_of[y] < 0) {
                col_of[y] = static_cast<int>(support.size());
                support.emplace_back();
            }
            support[col_of[y]].push_back(r);
        }
    }
    // a column whose support contains another's is never needed in the packing dual
    std::vector<int> order(support.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
    std::sort(order.begin(), order.end(), [&](int p, int q) {
        if (support[p].size() != support[q].size()) return support[p].size() < support[q].size();
        return support[p] < support[q];
    });
    std::vector<std::vector<int>> kept;
    std::vector<std::vector<int>> by_first(na);
    auto subset = [](const std::vector<int>& small, const std::vector<int>& big) {
        return std::includes(big.begin(), big.end(), small.begin(), small.end());
    };
    for (std::size_t i = 0; i < order.size(); ++i) {
        const auto& s = support[order[i]];
        if (i > 0 && s == support[order[i - 1]]) continue;
        bool dominated = false;
        for (int r : s) {
            for (int k : by_first[r])
                if (subset(kept[k], s)) {
                    dominated = true;
                    break;
                }
            if (dominated) break;
        }
        if (dominated) continue;
        by_first[s.front()].push_back(static_cast<int>(kept.size()));
        kept.push_back(s);
    }
    // packing dual: max sum u_y with sum over columns covering x at most 1
    const int nc = static_cast<int>(kept.size());
    LpModel m(nc, Sense::Maximize);
    std::fill(m.objective.begin(), m.objective.end(), 1.0);
    std::vector<std::vector<double>> rows(na, std::vector<double>(nc, 0.0));
    for (int c = 0; c < nc; ++c)
        for (int r : kept[c]) rows[r][c] = 1.0;
    for (auto& row : rows) m.add_row(std::move(row), Relation::Le, 1.0);
    return finish(rep, m, opt, false);
}

double dual_certificate_bound(int n, int d, const ConstraintSpec& a, const std::vector<double>& beta) {
    check_nd(n, d);
    a.check(n);
    if (n > 16) throw CapExceeded("certificate checking is limited to n <= 16");
    const std::size_t size = std::size_t{1} << n;
    if (beta.size() != size) throw InvalidParameter("beta must have 2^n entries");
    const double full = std::ldexp(1.0, n);
    double sum = 0.0, scale = 1.0;
    for (double b : beta) {
        sum += b;
        scale = std::max(scale, std::abs(b));
    }
    const double tol = 1e-9 * std::max(1.0, scale);
    if (std::abs(sum - full) > 1e-9 * full)
        throw CertificateRejected("sum of beta is " + std::to_string(sum) + ", expected 2^n = " +
                                  std::to_string(full));
    for (std::size_t s = 0; s < size; ++s)
        if (std::popcount(s) >= d && beta[s] > tol)
            throw CertificateRejected("beta(s) > 0 at a word of weight " + std::to_string(std::popcount(s)) +
                                      " >= d (index " + std::to_string(s) + ")");
    const auto hat = wht(beta);
    for (std::size_t s = 0; s < size; ++s)
        if (hat[s] < -tol * full)
            throw CertificateRejected("transform of beta is negative at index " + std::to_string(s));
    const double card = cardinality(a, n).convert_to<double>();
    return beta[0] * std::min(del_value(n, d, {}), card);
}

}  // namespace ccode

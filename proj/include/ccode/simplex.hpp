#pragma once

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <vector>

#include "ccode/lp.hpp"

namespace ccode::detail {

// Standard-form problem: maximize c.x, A x = b, 0 <= x <= ub, b >= 0.
// Columns listed in `initial_basis` form an identity block of A.
template <class Scalar>
struct StandardForm {
    using Mat = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
    using Vec = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
    Mat a;
    Vec b;
    Vec c;
    std::vector<Scalar> ub;  // infinity when unbounded above
    std::vector<int> initial_basis;
    int num_artificial = 0;  // the last columns of a
};

enum class SimplexOutcome { Optimal, Infeasible, Unbounded, IterationLimit };

template <class Scalar>
struct SimplexResult {
    SimplexOutcome outcome = SimplexOutcome::IterationLimit;
    std::vector<Scalar> x;  // one per non-artificial column
    long iterations = 0;
};

template <class Scalar>
struct RatioChoice {
    Scalar theta = 0;
    int row = -1;  // -1: the entering variable moves to its other bound
    bool to_upper = false;
};

// Harris two-pass ratio test for a step of sigma along column col: bound the
// step with slightly relaxed bounds, then take the largest pivot among rows
// whose exact ratio fits within it. Bland mode uses the textbook rule.
template <class Scalar, class Vec>
RatioChoice<Scalar> harris_ratio_test(const Vec& col, Scalar sigma, Scalar ub_j, const Vec& beta,
                                      const std::vector<int>& basis, const std::vector<Scalar>& ub,
                                      const LpOptions& opts, bool bland) {
    const Scalar tol = Scalar(opts.pivot_tol);
    const Scalar relax = bland ? Scalar(0) : Scalar(opts.feas_tol) / Scalar(10);
    const int m = static_cast<int>(basis.size());
    auto limit = [&](int i, Scalar a, Scalar extra, bool& up) -> Scalar {
        if (a > tol) {
            up = false;
            return (std::max<Scalar>(beta[i], 0) + extra) / a;
        }
        if (a < -tol && std::isfinite(static_cast<double>(ub[basis[i]]))) {
            up = true;
            return (std::max<Scalar>(ub[basis[i]] - beta[i], 0) + extra) / -a;
        }
        return Scalar(-1);
    };
    Scalar theta_max = ub_j;
    bool up = false;
    for (int i = 0; i < m; ++i) {
        const Scalar lim = limit(i, sigma * col[i], relax, up);
        if (lim >= Scalar(0)) theta_max = std::min(theta_max, lim);
    }
    RatioChoice<Scalar> out;
    out.theta = ub_j;
    if (ub_j <= theta_max) return out;
    Scalar best_piv = 0;
    for (int i = 0; i < m; ++i) {
        const Scalar a = sigma * col[i];
        const Scalar lim = limit(i, a, Scalar(0), up);
        if (lim < Scalar(0) || lim > theta_max) continue;
        bool take;
        if (out.row < 0) take = true;
        else if (bland) take = lim < out.theta || (lim == out.theta && basis[i] < basis[out.row]);
        else take = std::abs(a) > best_piv;
        if (take) {
            out.theta = lim;
            out.row = i;
            out.to_upper = up;
            best_piv = std::abs(a);
        }
    }
    return out;
}

// Dense bounded-variable primal simplex on a full tableau. Steepest-edge
// pricing with exact edge norms updated during each pivot sweep; Bland's rule
// while a run of degenerate pivots is longer than 5(m+n).
template <class Scalar>
class DenseSimplex {
public:
    using Mat = typename StandardForm<Scalar>::Mat;
    using Vec = typename StandardForm<Scalar>::Vec;

    DenseSimplex(const StandardForm<Scalar>& sf, const LpOptions& opts)
        : sf_(sf), opts_(opts), t_(sf.a), beta_(sf.b), basis_(sf.initial_basis) {
        ncols_ = static_cast<int>(t_.cols());
        active_cols_ = ncols_;
        at_upper_.assign(ncols_, false);
        is_basic_.assign(ncols_, -1);
        for (int i = 0; i < static_cast<int>(basis_.size()); ++i) is_basic_[basis_[i]] = i;
    }

    SimplexResult<Scalar> run() {
        SimplexResult<Scalar> res;
        const int nart = sf_.num_artificial;
        const int nreal = ncols_ - nart;
        if (nart > 0) {
            Vec c1 = Vec::Zero(ncols_);
            for (int j = nreal; j < ncols_; ++j) c1[j] = Scalar(-1);
            set_costs(c1);
            auto st = iterate_with_refresh(res.iterations);
            if (st == SimplexOutcome::IterationLimit) {
                res.outcome = st;
                return res;
            }
            Scalar infeas = 0;
            for (int i = 0; i < rows(); ++i)
                if (basis_[i] >= nreal) infeas += beta_[i];
            Scalar scale = 1;
            for (int i = 0; i < sf_.b.size(); ++i) scale = std::max<Scalar>(scale, std::abs(sf_.b[i]));
            if (infeas > Scalar(opts_.feas_tol) * scale) {
                res.outcome = SimplexOutcome::Infeasible;
                return res;
            }
            drive_out_artificials(nreal);
            active_cols_ = nreal;
        }
        set_costs(sf_.c.head(nreal).eval());
        res.outcome = iterate_with_refresh(res.iterations);
        res.x.assign(nreal, Scalar(0));
        for (int j = 0; j < nreal; ++j)
            if (is_basic_[j] < 0 && at_upper_[j]) res.x[j] = sf_.ub[j];
        for (int i = 0; i < rows(); ++i)
            if (basis_[i] < nreal) res.x[basis_[i]] = beta_[i];
        return res;
    }

    const std::vector<int>& basis() const { return basis_; }
    const std::vector<int>& kept_rows() const { return kept_rows_; }

private:
    int rows() const { return static_cast<int>(basis_.size()); }

    void set_costs(const Vec& c) {
        cost_ = Vec::Zero(ncols_);
        cost_.head(c.size()) = c;
        reduced_ = cost_.transpose();
        gamma_ = t_.colwise().squaredNorm().array() + Scalar(1);
        for (int i = 0; i < rows(); ++i) {
            const Scalar cb = cost_[basis_[i]];
            if (cb != Scalar(0)) reduced_.noalias() -= cb * t_.row(i);
        }
        for (int i = 0; i < rows(); ++i) reduced_[basis_[i]] = 0;
    }

    int price(bool bland) const {
        const Scalar tol = Scalar(opts_.pivot_tol);
        int best = -1;
        Scalar best_val = 0;
        for (int j = 0; j < active_cols_; ++j) {
            if (is_basic_[j] >= 0) continue;
            const Scalar r = reduced_[j];
            const bool eligible = at_upper_[j] ? r < -tol : r > tol;
            if (!eligible) continue;
            if (bland) return j;
            const Scalar score = r * r / gamma_[j];
            if (score > best_val) {
                best_val = score;
                best = j;
            }
        }
        return best;
    }

    void pivot(int r, int j) {
        const Scalar p = t_(r, j);
        // cross[k] = <column k, column j> before the pivot
        cross_ = t_.row(r) * p;
        t_.row(r) /= p;
        for (int i = 0; i < rows(); ++i) {
            if (i == r) continue;
            const Scalar f = t_(i, j);
            if (f == Scalar(0)) continue;
            cross_.noalias() += f * t_.row(i);
            t_.row(i).noalias() -= f * t_.row(r);
        }
        const Scalar gq = gamma_[j];
        const int leaving = basis_[r];
        for (int k = 0; k < ncols_; ++k) {
            const Scalar rho = t_(r, k);
            if (rho == Scalar(0)) continue;
            const Scalar g = gamma_[k] - Scalar(2) * rho * cross_[k] + rho * rho * gq;
            gamma_[k] = std::max(g, Scalar(1) + rho * rho);
        }
        gamma_[leaving] = std::max(gq / (p * p), Scalar(1) + Scalar(1) / (p * p));
        gamma_[j] = 1;
        const Scalar f = reduced_[j];
        if (f != Scalar(0)) reduced_.noalias() -= f * t_.row(r);
        reduced_[j] = 0;
        is_basic_[basis_[r]] = -1;
        basis_[r] = j;
        is_basic_[j] = r;
    }

    // Rebuilds the tableau, basic values, reduced costs and edge norms from
    // the original data for the current basis.
    void refresh() {
        const int m = rows();
        std::vector<int> src(m);
        for (int i = 0; i < m; ++i) src[i] = kept_rows_.empty() ? i : kept_rows_[i];
        Mat a(m, ncols_);
        Vec rhs(m);
        for (int i = 0; i < m; ++i) {
            a.row(i) = sf_.a.row(src[i]);
            rhs[i] = sf_.b[src[i]];
        }
        Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> bmat(m, m);
        for (int q = 0; q < m; ++q) bmat.col(q) = a.col(basis_[q]);
        for (int j = 0; j < ncols_; ++j)
            if (is_basic_[j] < 0 && at_upper_[j]) rhs.noalias() -= sf_.ub[j] * a.col(j);
        Eigen::PartialPivLU<Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>> lu(bmat);
        t_ = lu.solve(a);
        beta_ = lu.solve(rhs);
        for (int i = 0; i < m; ++i) {
            t_.col(basis_[i]).setZero();
            t_(i, basis_[i]) = 1;
        }
        reduced_ = cost_.transpose();
        for (int i = 0; i < m; ++i) {
            const Scalar cb = cost_[basis_[i]];
            if (cb != Scalar(0)) reduced_.noalias() -= cb * t_.row(i);
        }
        for (int i = 0; i < m; ++i) reduced_[basis_[i]] = 0;
        gamma_ = t_.colwise().squaredNorm().array() + Scalar(1);
    }

    SimplexOutcome iterate_with_refresh(long& iterations) {
        for (int round = 0;; ++round) {
            const auto st = iterate(iterations);
            if (st != SimplexOutcome::Optimal || round >= 20) return st;
            refresh();
            if (price(false) < 0) return st;
        }
    }

    SimplexOutcome iterate(long& iterations) {
        const long degenerate_limit = 5L * (rows() + active_cols_);
        long degenerate_run = 0;
        while (true) {
            if (iterations >= opts_.max_iterations) return SimplexOutcome::IterationLimit;
            const bool bland = degenerate_run > degenerate_limit;
            const int j = price(bland);
            if (j < 0) return SimplexOutcome::Optimal;
            ++iterations;
            if (++since_refresh_ >= refresh_interval()) {
                refresh();
                since_refresh_ = 0;
                continue;
            }
            const Scalar sigma = at_upper_[j] ? Scalar(-1) : Scalar(1);
            col_ = t_.col(j);
            const auto choice = harris_ratio_test(col_, sigma, sf_.ub[j], beta_, basis_, sf_.ub, opts_, bland);
            const Scalar theta = choice.theta;
            const int leave = choice.row;
            const bool leave_to_upper = choice.to_upper;
            if (leave < 0 && !std::isfinite(static_cast<double>(theta))) return SimplexOutcome::Unbounded;
            if (theta <= Scalar(1e-12)) {
                ++degenerate_run;
            } else {
                degenerate_run = 0;
            }
            if (theta != Scalar(0)) beta_.noalias() -= (sigma * theta) * col_;
            if (leave < 0) {
                at_upper_[j] = !at_upper_[j];
                continue;
            }
            const Scalar entering_value = at_upper_[j] ? sf_.ub[j] - theta : theta;
            const int old = basis_[leave];
            pivot(leave, j);
            at_upper_[j] = false;
            at_upper_[old] = leave_to_upper;
            beta_[leave] = entering_value;
        }
    }

    void drive_out_artificials(int nreal) {
        const Scalar tol = Scalar(opts_.pivot_tol);
        std::vector<int> drop;
        for (int r = 0; r < rows(); ++r) {
            if (basis_[r] < nreal) continue;
            int best = -1;
            Scalar best_abs = tol;
            for (int j = 0; j < nreal; ++j) {
                if (is_basic_[j] >= 0) continue;
                if (std::abs(t_(r, j)) > best_abs) {
                    best_abs = std::abs(t_(r, j));
                    best = j;
                }
            }
            if (best < 0) {
                drop.push_back(r);
                continue;
            }
            const Scalar value = at_upper_[best] ? sf_.ub[best] : Scalar(0);
            pivot(r, best);
            at_upper_[best] = false;
            beta_[r] = value;
        }
        kept_rows_.clear();
        for (int r = 0; r < rows(); ++r)
            if (std::find(drop.begin(), drop.end(), r) == drop.end()) kept_rows_.push_back(r);
        if (drop.empty()) return;
        Mat t2(kept_rows_.size(), ncols_);
        Vec b2(kept_rows_.size());
        std::vector<int> basis2;
        for (std::size_t i = 0; i < kept_rows_.size(); ++i) {
            t2.row(i) = t_.row(kept_rows_[i]);
            b2[i] = beta_[kept_rows_[i]];
            basis2.push_back(basis_[kept_rows_[i]]);
        }
        t_ = std::move(t2);
        beta_ = std::move(b2);
        basis_ = std::move(basis2);
        std::fill(is_basic_.begin(), is_basic_.end(), -1);
        for (int i = 0; i < rows(); ++i) is_basic_[basis_[i]] = i;
    }

    const StandardForm<Scalar>& sf_;
    LpOptions opts_;
    Mat t_;
    Vec beta_;
    Vec cost_;
    Eigen::Matrix<Scalar, 1, Eigen::Dynamic> reduced_;
    Eigen::Matrix<Scalar, 1, Eigen::Dynamic> gamma_;
    Eigen::Matrix<Scalar, 1, Eigen::Dynamic> cross_;
    Vec col_;
    std::vector<int> basis_;
    std::vector<int> is_basic_;
    std::vector<bool> at_upper_;
    std::vector<int> kept_rows_;
    int ncols_ = 0;
    long since_refresh_ = 0;
    long refresh_interval() const { return std::max(500L, 2L * rows()); }
    int active_cols_ = 0;
};

// Revised bounded-variable primal simplex keeping an explicit dense basis
// inverse and sparse columns; Devex pricing. Suited to wide sparse models
// where a full tableau would be mostly zeros.
template <class Scalar>
class RevisedSimplex {
public:
    using Vec = typename StandardForm<Scalar>::Vec;
    using Inv = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

    RevisedSimplex(const StandardForm<Scalar>& sf, const LpOptions& opts)
        : sf_(sf), opts_(opts), basis_(sf.initial_basis) {
        const int m = static_cast<int>(sf.a.rows());
        ncols_ = static_cast<int>(sf.a.cols());
        active_cols_ = ncols_;
        for (int i = 0; i < m; ++i) kept_rows_.push_back(i);
        build_columns();
        at_upper_.assign(ncols_, false);
        is_basic_.assign(ncols_, -1);
        for (int i = 0; i < m; ++i) is_basic_[basis_[i]] = i;
        binv_ = Inv::Identity(m, m);
        // the initial basis is an identity block, possibly with -1 entries
        for (int i = 0; i < m; ++i) binv_(i, i) = Scalar(1) / sf.a(i, basis_[i]);
        beta_ = binv_ * sf.b;
    }

    SimplexResult<Scalar> run() {
        SimplexResult<Scalar> res;
        const int nart = sf_.num_artificial;
        const int nreal = ncols_ - nart;
        if (nart > 0) {
            Vec c1 = Vec::Zero(ncols_);
            for (int j = nreal; j < ncols_; ++j) c1[j] = Scalar(-1);
            cost_ = c1;
            refresh();
            auto st = iterate_with_refresh(res.iterations);
            if (st == SimplexOutcome::IterationLimit) {
                res.outcome = st;
                return res;
            }
            Scalar infeas = 0;
            for (int i = 0; i < rows(); ++i)
                if (basis_[i] >= nreal) infeas += beta_[i];
            Scalar scale = 1;
            for (int i = 0; i < sf_.b.size(); ++i) scale = std::max<Scalar>(scale, std::abs(sf_.b[i]));
            if (infeas > Scalar(opts_.feas_tol) * scale) {
                res.outcome = SimplexOutcome::Infeasible;
                return res;
            }
            drive_out_artificials(nreal);
            active_cols_ = nreal;
        }
        cost_ = Vec::Zero(ncols_);
        cost_.head(nreal) = sf_.c.head(nreal);
        refresh();
        res.outcome = iterate_with_refresh(res.iterations);
        res.x.assign(nreal, Scalar(0));
        for (int j = 0; j < nreal; ++j)
            if (is_basic_[j] < 0 && at_upper_[j]) res.x[j] = sf_.ub[j];
        for (int i = 0; i < rows(); ++i)
            if (basis_[i] < nreal) res.x[basis_[i]] = beta_[i];
        return res;
    }

    const std::vector<int>& basis() const { return basis_; }
    const std::vector<int>& kept_rows() const { return kept_rows_; }

private:
    int rows() const { return static_cast<int>(basis_.size()); }

    // Compressed columns over the kept rows; row ids are positions in kept_rows_.
    void build_columns() {
        start_.assign(ncols_ + 1, 0);
        idx_.clear();
        val_.clear();
        for (int j = 0; j < ncols_; ++j) {
            for (int i = 0; i < static_cast<int>(kept_rows_.size()); ++i) {
                const Scalar v = sf_.a(kept_rows_[i], j);
                if (v != Scalar(0)) {
                    idx_.push_back(i);
                    val_.push_back(v);
                }
            }
            start_[j + 1] = static_cast<int>(idx_.size());
        }
    }

    // B^{-1} a_j
    void ftran(int j, Vec& out) const {
        out.setZero(rows());
        for (int k = start_[j]; k < start_[j + 1]; ++k) out.noalias() += val_[k] * binv_.col(idx_[k]);
    }

    Scalar row_dot(const Vec& rho, int j) const {
        Scalar s = 0;
        for (int k = start_[j]; k < start_[j + 1]; ++k) s += rho[idx_[k]] * val_[k];
        return s;
    }

    void refresh() {
        const int m = rows();
        Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> bmat = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>::Zero(m, m);
        for (int q = 0; q < m; ++q)
            for (int k = start_[basis_[q]]; k < start_[basis_[q] + 1]; ++k) bmat(idx_[k], q) = val_[k];
        Eigen::PartialPivLU<Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>> lu(bmat);
        binv_ = lu.inverse();
        Vec rhs(m);
        for (int i = 0; i < m; ++i) rhs[i] = sf_.b[kept_rows_[i]];
        for (int j = 0; j < ncols_; ++j)
            if (is_basic_[j] < 0 && at_upper_[j])
                for (int k = start_[j]; k < start_[j + 1]; ++k) rhs[idx_[k]] -= sf_.ub[j] * val_[k];
        beta_ = lu.solve(rhs);
        Vec cb(m);
        for (int i = 0; i < m; ++i) cb[i] = cost_[basis_[i]];
        const Vec y = binv_.transpose() * cb;
        reduced_.resize(ncols_);
        for (int j = 0; j < ncols_; ++j) reduced_[j] = is_basic_[j] >= 0 ? Scalar(0) : cost_[j] - row_dot(y, j);
        weight_.assign(ncols_, Scalar(1));
    }

    int price(bool bland) const {
        const Scalar tol = Scalar(opts_.pivot_tol);
        int best = -1;
        Scalar best_val = 0;
        for (int j = 0; j < active_cols_; ++j) {
            if (is_basic_[j] >= 0) continue;
            const Scalar r = reduced_[j];
            const bool eligible = at_upper_[j] ? r < -tol : r > tol;
            if (!eligible) continue;
            if (bland) return j;
            const Scalar score = r * r / weight_[j];
            if (score > best_val) {
                best_val = score;
                best = j;
            }
        }
        return best;
    }

    // Basis change: column j enters at row r; d = B^{-1} a_j.
    void pivot(int r, int j, const Vec& d) {
        const Scalar p = d[r];
        rho_ = binv_.row(r).transpose() / p;
        const Scalar dq = reduced_[j];
        const Scalar wq = std::max(weight_[j], Scalar(1));
        for (int k = 0; k < active_cols_; ++k) {
            if (is_basic_[k] >= 0 || k == j) continue;
            const Scalar alpha = row_dot(rho_, k);
            if (alpha == Scalar(0)) continue;
            reduced_[k] -= dq * alpha;
            weight_[k] = std::max(weight_[k], alpha * alpha * wq);
        }
        const int leaving = basis_[r];
        reduced_[leaving] = -dq / p;
        weight_[leaving] = std::max(wq / (p * p), Scalar(1));
        reduced_[j] = 0;
        for (int i = 0; i < rows(); ++i) {
            if (i == r) continue;
            const Scalar f = d[i];
            if (f != Scalar(0)) binv_.row(i).noalias() -= f * rho_.transpose();
        }
        binv_.row(r) = rho_.transpose();
        is_basic_[leaving] = -1;
        basis_[r] = j;
        is_basic_[j] = r;
    }

    SimplexOutcome iterate_with_refresh(long& iterations) {
        for (int round = 0;; ++round) {
            const auto st = iterate(iterations);
            if (st != SimplexOutcome::Optimal || round >= 20) return st;
            refresh();
            if (price(false) < 0) return st;
        }
    }

    SimplexOutcome iterate(long& iterations) {
        const long degenerate_limit = 5L * (rows() + active_cols_);
        long degenerate_run = 0;
        while (true) {
            if (iterations >= opts_.max_iterations) return SimplexOutcome::IterationLimit;
            const bool bland = degenerate_run > degenerate_limit;
            const int j = price(bland);
            if (j < 0) return SimplexOutcome::Optimal;
            ++iterations;
            if (++since_refresh_ >= std::max(200L, static_cast<long>(rows()))) {
                refresh();
                since_refresh_ = 0;
                continue;
            }
            const Scalar sigma = at_upper_[j] ? Scalar(-1) : Scalar(1);
            ftran(j, col_);
            const auto choice = harris_ratio_test(col_, sigma, sf_.ub[j], beta_, basis_, sf_.ub, opts_, bland);
            if (choice.row < 0 && !std::isfinite(static_cast<double>(choice.theta))) return SimplexOutcome::Unbounded;
            degenerate_run = choice.theta <= Scalar(1e-12) ? degenerate_run + 1 : 0;
            if (choice.theta != Scalar(0)) beta_.noalias() -= (sigma * choice.theta) * col_;
            if (choice.row < 0) {
                at_upper_[j] = !at_upper_[j];
                continue;
            }
            const Scalar entering_value = at_upper_[j] ? sf_.ub[j] - choice.theta : choice.theta;
            const int old = basis_[choice.row];
            pivot(choice.row, j, col_);
            at_upper_[j] = false;
            at_upper_[old] = choice.to_upper;
            beta_[choice.row] = entering_value;
        }
    }

    void drive_out_artificials(int nreal) {
        const Scalar tol = Scalar(opts_.pivot_tol);
        std::vector<int> drop;
        for (int r = 0; r < rows(); ++r) {
            if (basis_[r] < nreal) continue;
            const Vec rho = binv_.row(r).transpose();
            int best = -1;
            Scalar best_abs = tol;
            for (int j = 0; j < nreal; ++j) {
                if (is_basic_[j] >= 0) continue;
                const Scalar a = std::abs(row_dot(rho, j));
                if (a > best_abs) {
                    best_abs = a;
                    best = j;
                }
            }
            if (best < 0) {
                drop.push_back(r);
                continue;
            }
            const Scalar value = at_upper_[best] ? sf_.ub[best] : Scalar(0);
            ftran(best, col_);
            pivot(r, best, col_);
            at_upper_[best] = false;
            beta_[r] = value;
        }
        if (drop.empty()) return;
        std::vector<int> kept, basis2;
        for (int r = 0; r < rows(); ++r)
            if (std::find(drop.begin(), drop.end(), r) == drop.end()) {
                kept.push_back(kept_rows_[r]);
                basis2.push_back(basis_[r]);
            }
        for (int r : drop) is_basic_[basis_[r]] = -1;
        kept_rows_ = std::move(kept);
        basis_ = std::move(basis2);
        std::fill(is_basic_.begin(), is_basic_.end(), -1);
        for (int i = 0; i < rows(); ++i) is_basic_[basis_[i]] = i;
        build_columns();
    }

    const StandardForm<Scalar>& sf_;
    LpOptions opts_;
    Inv binv_;
    Vec beta_, cost_, col_, rho_;
    Eigen::Matrix<Scalar, Eigen::Dynamic, 1> reduced_;
    std::vector<Scalar> weight_;
    std::vector<int> start_, idx_;
    std::vector<Scalar> val_;
    std::vector<int> basis_, is_basic_, kept_rows_;
    std::vector<bool> at_upper_;
    int ncols_ = 0, active_cols_ = 0;
    long since_refresh_ = 0;
};

}  // namespace ccode::detail

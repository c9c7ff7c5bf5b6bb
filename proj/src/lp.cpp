#include "ccode/lp.hpp"

#include <cmath>
#include <fstream>
#include <iomanip>
#include <map>
#include <ostream>

#include "ccode/errors.hpp"
#include "ccode/simplex.hpp"

namespace ccode {

std::string to_string(LpStatus s) {
    switch (s) {
        case LpStatus::Optimal: return "optimal";
        case LpStatus::Infeasible: return "infeasible";
        case LpStatus::Unbounded: return "unbounded";
        case LpStatus::IterationLimit: return "iteration_limit";
    }
    return "?";
}

LpModel::LpModel(int num_vars, Sense s)
    : sense(s), objective(num_vars, 0.0), lower(num_vars, 0.0), upper(num_vars, kInf) {}

void LpModel::add_row(std::vector<double> coef, Relation rel, double rhs) {
    rows.push_back(LpRow{std::move(coef), rel, rhs});
}

void LpModel::validate() const {
    const std::size_t nv = objective.size();
    if (lower.size() != nv || upper.size() != nv)
        throw InvalidParameter("LP bound vectors do not match the variable count");
    for (std::size_t j = 0; j < nv; ++j) {
        if (!std::isfinite(objective[j])) throw InvalidParameter("non-finite objective coefficient");
        if (!std::isfinite(lower[j])) throw InvalidParameter("LP variables need finite lower bounds");
        if (std::isnan(upper[j]) || upper[j] < lower[j]) throw InvalidParameter("LP variable bounds are inconsistent");
    }
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].coef.size() != nv)
            throw InvalidParameter("LP row " + std::to_string(i) + " has the wrong number of coefficients");
        if (!std::isfinite(rows[i].rhs)) throw InvalidParameter("non-finite right-hand side");
        for (double v : rows[i].coef)
            if (!std::isfinite(v)) throw InvalidParameter("non-finite constraint coefficient");
    }
}

double max_violation(const LpModel& model, const std::vector<double>& x) {
    double worst = 0.0;
    for (int j = 0; j < model.num_vars(); ++j) {
        worst = std::max(worst, (model.lower[j] - x[j]) / std::max(1.0, std::abs(model.lower[j])));
        if (std::isfinite(model.upper[j]))
            worst = std::max(worst, (x[j] - model.upper[j]) / std::max(1.0, std::abs(model.upper[j])));
    }
    for (const auto& row : model.rows) {
        double lhs = 0.0;
        for (int j = 0; j < model.num_vars(); ++j) lhs += row.coef[j] * x[j];
        const double scale = std::max(1.0, std::abs(row.rhs));
        double v = 0.0;
        if (row.rel == Relation::Le) v = lhs - row.rhs;
        else if (row.rel == Relation::Ge) v = row.rhs - lhs;
        else v = std::abs(lhs - row.rhs);
        worst = std::max(worst, v / scale);
    }
    return worst;
}

namespace {

template <class Scalar>
LpSolution solve_impl(const LpModel& model, const LpOptions& opts) {
    model.validate();
    const int nv = model.num_vars();
    const double sgn = model.sense == Sense::Maximize ? 1.0 : -1.0;

    // fixed variables leave the problem; the rest shift to lower bound 0
    std::vector<int> active;
    std::vector<int> col_of(nv, -1);
    for (int j = 0; j < nv; ++j)
        if (model.lower[j] != model.upper[j]) {
            col_of[j] = static_cast<int>(active.size());
            active.push_back(j);
        }
    const int na = static_cast<int>(active.size());

    struct Std {
        std::vector<double> coef;
        Relation rel;
        double rhs;
    };
    std::vector<Std> rows;
    std::map<std::vector<double>, int> seen;
    LpSolution out;
    for (const auto& row : model.rows) {
        double rhs = row.rhs;
        for (int j = 0; j < nv; ++j)
            if (row.coef[j] != 0.0) rhs -= row.coef[j] * model.lower[j];
        std::vector<double> coef(na);
        bool any = false;
        for (int k = 0; k < na; ++k) {
            coef[k] = row.coef[active[k]];
            any = any || coef[k] != 0.0;
        }
        if (!any) {
            const double tol = opts.feas_tol * std::max(1.0, std::abs(row.rhs));
            const bool ok = row.rel == Relation::Le ? 0.0 <= rhs + tol
                          : row.rel == Relation::Ge ? 0.0 >= rhs - tol
                                                    : std::abs(rhs) <= tol;
            if (!ok) {
                out.status = LpStatus::Infeasible;
                return out;
            }
            continue;
        }
        auto key = coef;
        key.push_back(static_cast<double>(row.rel));
        key.push_back(rhs);
        if (!seen.emplace(std::move(key), 0).second) continue;
        rows.push_back(Std{std::move(coef), row.rel, rhs});
    }
    const int m = static_cast<int>(rows.size());

    // slack per inequality; artificial where the slack cannot start basic
    int nslack = 0;
    for (const auto& r : rows) nslack += r.rel != Relation::Eq;
    std::vector<int> slack_col(m, -1), art_row;
    std::vector<double> row_sign(m, 1.0);
    {
        int s = na;
        for (int i = 0; i < m; ++i) {
            if (rows[i].rel != Relation::Eq) slack_col[i] = s++;
            const double slack_coef = rows[i].rel == Relation::Le ? 1.0 : -1.0;
            if (rows[i].rhs < 0 || (rows[i].rhs == 0 && rows[i].rel == Relation::Ge)) row_sign[i] = -1.0;
            const bool slack_basic = rows[i].rel != Relation::Eq && slack_coef * row_sign[i] > 0;
            if (!slack_basic) art_row.push_back(i);
        }
    }
    const int nart = static_cast<int>(art_row.size());
    const int ncols = na + nslack + nart;

    detail::StandardForm<Scalar> sf;
    sf.a.setZero(m, ncols);
    sf.b.resize(m);
    sf.c.setZero(ncols);
    sf.ub.assign(ncols, Scalar(kInf));
    sf.num_artificial = nart;
    sf.initial_basis.assign(m, -1);
    for (int i = 0; i < m; ++i) {
        for (int k = 0; k < na; ++k) sf.a(i, k) = Scalar(row_sign[i] * rows[i].coef[k]);
        if (slack_col[i] >= 0) {
            const double slack_coef = rows[i].rel == Relation::Le ? 1.0 : -1.0;
            sf.a(i, slack_col[i]) = Scalar(row_sign[i] * slack_coef);
            if (slack_coef * row_sign[i] > 0) sf.initial_basis[i] = slack_col[i];
        }
        sf.b[i] = Scalar(row_sign[i] * rows[i].rhs);
    }
    for (int q = 0; q < nart; ++q) {
        const int col = na + nslack + q;
        sf.a(art_row[q], col) = 1;
        sf.initial_basis[art_row[q]] = col;
    }
    for (int k = 0; k < na; ++k) {
        const int j = active[k];
        sf.c[k] = Scalar(sgn * model.objective[j]);
        sf.ub[k] = Scalar(model.upper[j] - model.lower[j]);
    }

    std::size_t nnz = 0;
    for (const auto& r : rows)
        for (double v : r.coef) nnz += v != 0.0;
    LpAlgorithm algo = opts.algorithm;
    if (algo == LpAlgorithm::Auto) {
        const double density = m > 0 && na > 0 ? static_cast<double>(nnz) / (static_cast<double>(m) * na) : 1.0;
        algo = density < 0.1 && na >= 2 * m ? LpAlgorithm::Revised : LpAlgorithm::Tableau;
    }
    detail::SimplexResult<Scalar> res;
    std::vector<int> basis, kept;
    if (algo == LpAlgorithm::Revised) {
        detail::RevisedSimplex<Scalar> simplex(sf, opts);
        res = simplex.run();
        basis = simplex.basis();
        kept = simplex.kept_rows();
    } else {
        detail::DenseSimplex<Scalar> simplex(sf, opts);
        res = simplex.run();
        basis = simplex.basis();
        kept = simplex.kept_rows();
    }
    out.iterations = res.iterations;
    out.rows_used = m;
    out.cols_used = na;
    switch (res.outcome) {
        case detail::SimplexOutcome::Infeasible: out.status = LpStatus::Infeasible; return out;
        case detail::SimplexOutcome::Unbounded: out.status = LpStatus::Unbounded; return out;
        case detail::SimplexOutcome::IterationLimit: out.status = LpStatus::IterationLimit; break;
        case detail::SimplexOutcome::Optimal: out.status = LpStatus::Optimal; break;
    }

    // recompute basic values from the original data to shed pivoting drift
    if (out.status == LpStatus::Optimal && m > 0) {
        if (kept.empty())
            for (int i = 0; i < m; ++i) kept.push_back(i);
        const int mb = static_cast<int>(basis.size());
        bool all_real = true;
        for (int c : basis) all_real = all_real && c < ncols - nart;
        if (all_real && mb == static_cast<int>(kept.size())) {
            using Mat = typename detail::StandardForm<Scalar>::Mat;
            using Vec = typename detail::StandardForm<Scalar>::Vec;
            Mat bmat(mb, mb);
            Vec rhs(mb);
            std::vector<char> basic(ncols, 0);
            for (int c : basis) basic[c] = 1;
            for (int i = 0; i < mb; ++i) {
                for (int q = 0; q < mb; ++q) bmat(i, q) = sf.a(kept[i], basis[q]);
                Scalar r = sf.b[kept[i]];
                for (int c = 0; c < ncols - nart; ++c)
                    if (!basic[c] && c < static_cast<int>(res.x.size()) && res.x[c] != Scalar(0))
                        r -= sf.a(kept[i], c) * res.x[c];
                rhs[i] = r;
            }
            Eigen::PartialPivLU<Mat> lu(bmat);
            Vec xb = lu.solve(rhs);
            if (xb.allFinite())
                for (int q = 0; q < mb; ++q) res.x[basis[q]] = xb[q];
        }
    }

    out.primal.assign(nv, 0.0);
    for (int j = 0; j < nv; ++j)
        out.primal[j] = col_of[j] < 0 ? model.lower[j] : model.lower[j] + static_cast<double>(res.x[col_of[j]]);
    double value = 0.0;
    for (int j = 0; j < nv; ++j) value += model.objective[j] * out.primal[j];
    out.value = value;
    if (out.status == LpStatus::Optimal && max_violation(model, out.primal) > opts.feas_tol)
        throw ConsistencyError("simplex returned a point violating the model by " +
                               std::to_string(max_violation(model, out.primal)));
    return out;
}

}  // namespace

LpSolution solve(const LpModel& model, const LpOptions& opts) { return solve_impl<double>(model, opts); }

LpSolution solve_long_double(const LpModel& model, const LpOptions& opts) {
    return solve_impl<long double>(model, opts);
}

void write_lp_dump(const LpModel& model, std::ostream& os) {
    os << std::setprecision(17);
    os << "# vars " << model.num_vars() << " rows " << model.num_rows() << "\n";
    os << (model.sense == Sense::Maximize ? "max" : "min");
    for (double c : model.objective) os << ' ' << c;
    os << "\n";
    for (const auto& row : model.rows) {
        for (std::size_t j = 0; j < row.coef.size(); ++j) os << (j ? " " : "") << row.coef[j];
        os << (row.rel == Relation::Le ? " <= " : row.rel == Relation::Ge ? " >= " : " = ") << row.rhs << "\n";
    }
    for (int j = 0; j < model.num_vars(); ++j)
        if (model.lower[j] != 0.0 || std::isfinite(model.upper[j]))
            os << "bound " << j << ' ' << model.lower[j] << ' ' << model.upper[j] << "\n";
}

void write_lp_dump(const LpModel& model, const std::string& path) {
    std::ofstream f(path);
    if (!f) throw InvalidParameter("cannot open LP dump file '" + path + "'");
    write_lp_dump(model, f);
}

}  // namespace ccode

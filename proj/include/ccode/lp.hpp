#pragma once

#include <iosfwd>
#include <limits>
#include <string>
#include <vector>

namespace ccode {

enum class Sense { Maximize, Minimize };
enum class Relation { Le, Ge, Eq };
enum class LpStatus { Optimal, Infeasible, Unbounded, IterationLimit };

std::string to_string(LpStatus s);

inline constexpr double kInf = std::numeric_limits<double>::infinity();

struct LpRow {
    std::vector<double> coef;
    Relation rel = Relation::Le;
    double rhs = 0.0;
};

// Dense LP: optimize objective . x subject to rows and lower <= x <= upper.
struct LpModel {
    Sense sense = Sense::Maximize;
    std::vector<double> objective;
    std::vector<LpRow> rows;
    std::vector<double> lower;  // default 0
    std::vector<double> upper;  // default +inf

    explicit LpModel(int num_vars = 0, Sense s = Sense::Maximize);
    int num_vars() const { return static_cast<int>(objective.size()); }
    int num_rows() const { return static_cast<int>(rows.size()); }
    void add_row(std::vector<double> coef, Relation rel, double rhs);
    void fix(int var, double value) { lower[var] = upper[var] = value; }
    // Throws InvalidParameter on size mismatches or non-finite data.
    void validate() const;
};

// Tableau: full dense tableau with steepest-edge pricing.
// Revised: explicit basis inverse over sparse columns with Devex pricing.
// Auto picks Revised for wide models with few nonzeros.
enum class LpAlgorithm { Auto, Tableau, Revised };

struct LpOptions {
    LpAlgorithm algorithm = LpAlgorithm::Auto;
    double pivot_tol = 1e-9;
    double feas_tol = 1e-7;
    long max_iterations = 1000000;
};

struct LpSolution {
    LpStatus status = LpStatus::IterationLimit;
    double value = 0.0;
    std::vector<double> primal;
    long iterations = 0;
    int rows_used = 0;  // after fixed-variable elimination and row dedup
    int cols_used = 0;
};

LpSolution solve(const LpModel& model, const LpOptions& opts = {});
// Same algorithm in extended precision; slower, used as a cross-check.
LpSolution solve_long_double(const LpModel& model, const LpOptions& opts = {});

// Largest violation of any row or bound by x, relative to max(1, |rhs|).
double max_violation(const LpModel& model, const std::vector<double>& x);

// Plain-text dump: header, objective line, one row per line, then bounds.
void write_lp_dump(const LpModel& model, std::ostream& os);
void write_lp_dump(const LpModel& model, const std::string& path);

}  // namespace ccode

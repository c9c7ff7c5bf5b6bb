#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ccode/constraints.hpp"
#include "ccode/lp.hpp"

namespace ccode {

struct BoundReport {
    int n = 0, d = 0;
    std::optional<ConstraintSpec> constraint;  // empty for the unconstrained programs
    std::string program;                       // del, del-full, del-constrained, del-sym, gensph
    LpStatus status = LpStatus::Optimal;
    double lp_value = 0.0;
    double code_size_bound = 0.0;
    long iterations = 0;
    int lp_rows = 0, lp_cols = 0;
    std::optional<double> gensph;    // comparator columns
    std::optional<double> delsarte;
};

struct BoundOptions {
    LpOptions lp;
    std::string dump_path;  // write the model here when non-empty
};

// Delsarte LP in the distance-distribution variables a_0..a_n.
BoundReport del_classic(int n, int d, const BoundOptions& opt = {});
// Same program with one variable per word, n <= 12.
BoundReport del_full(int n, int d, const BoundOptions& opt = {});
// Constrained program with one variable per word, n <= 12; bound = sqrt(LP).
BoundReport del_constrained(int n, int d, const ConstraintSpec& a, const BoundOptions& opt = {});
// Orbit-symmetrized constrained program (2-charge, subblock).
BoundReport del_constrained_sym(int n, int d, const ConstraintSpec& a, const BoundOptions& opt = {});
// Generalized sphere packing: minimum fractional cover of the radius-t balls
// around A (t = floor((d-1)/2)) by weights on the words of A.
BoundReport gensph(int n, int d, const ConstraintSpec& a, const BoundOptions& opt = {});

// The constraint model builders, exposed for dumps and tests.
LpModel del_classic_model(int n, int d);
LpModel del_full_model(int n, int d);
LpModel del_constrained_model(int n, int d, const ConstraintSpec& a, double del_value);
LpModel del_constrained_sym_model(int n, int d, const ConstraintSpec& a, double del_value);

// Checks beta_hat >= 0, beta(s) <= 0 for w(s) >= d, sum beta = 2^n, and
// returns beta(0) * min{OPT(Del(n,d)), |A|}. Throws CertificateRejected.
double dual_certificate_bound(int n, int d, const ConstraintSpec& a, const std::vector<double>& beta);

}  // namespace ccode

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ccode/codes.hpp"
#include "ccode/constraints.hpp"

namespace ccode {

enum class CountMethod { Auto, DualSum, Direct, Brute };

std::string to_string(CountMethod m);
CountMethod parse_count_method(const std::string& s);

struct CountResult {
    BigInt value;
    CountMethod method = CountMethod::Auto;  // the method actually used
    int dual_dimension_used = 0;             // n-k when the dual side was summed
};

// N(C;A). Auto sums over the dual when n-k < k, otherwise tests every codeword.
CountResult count_in_code(const BinaryLinearCode& code, const ConstraintSpec& a,
                          CountMethod method = CountMethod::Auto, int cap = kDefaultEnumCap);
BigInt count_brute(const BinaryLinearCode& code, const ConstraintSpec& a);

struct WeightDistribution {
    int n = 0;
    std::vector<BigInt> counts;  // index 0..n
    BigInt total() const;
};

WeightDistribution weight_distribution(const ConstraintSpec& a, int n);
WeightDistribution constrained_weight_distribution(const BinaryLinearCode& code, const ConstraintSpec& a);
WeightDistribution code_weight_distribution(const BinaryLinearCode& code, int cap = kDefaultEnumCap);
// Distribution of the dual from that of a linear code of size code_size.
WeightDistribution macwilliams(const WeightDistribution& w, const BigInt& code_size);

struct TwoChargeReport {
    bool criterion_c_holds = false;
    int t = 0;                // dim of C-dual intersected with span(B)
    BigInt predicted_count;   // 0, or |C| 2^{t + floor(n/2) - n}
};

TwoChargeReport two_charge_structure(const BinaryLinearCode& code);

struct OddCountReport {
    BigInt count;
    std::optional<BigInt> predicted;  // closed form when the family has one
    std::string formula;
};

// OddStrict / OddRelaxed counts with the family closed forms:
// Hamming + odd-strict: 2^{floor((2^m-1)/2) - m + 1}; RM + odd: 2^{C(m-1,<=r-1)+1} - 1.
OddCountReport count_odd_in_code(const NamedCode& code, const ConstraintSpec& a);

// The value 2^{floor((2^m-1)/2) - m} as printed for the Hamming/odd-strict
// corollary; m=2 gives 1/2, so it is returned as a double.
double hamming_odd_strict_printed_formula(int m);

struct PlotkinCounts {
    BigInt count_primal;
    BigInt count_dual;
};

// N(RM(m,r); subblock p=2 weight z) through the (u|u+v) coset sums.
PlotkinCounts rm_subblock_count_plotkin(int m, int r, int z);

}  // namespace ccode

#pragma once

#include <map>
#include <string>
#include <vector>

#include "ccode/bitword.hpp"
#include "ccode/spectral.hpp"

namespace ccode {

enum class ConstraintKind { TwoCharge, Subblock, RllDInf, OddStrict, OddRelaxed, EvenStrict, FixedWeight, Full };

struct ConstraintSpec {
    ConstraintKind kind = ConstraintKind::Full;
    int p = 0, z = 0;  // Subblock
    int d = 0;         // RllDInf
    int i = 0;         // FixedWeight

    static ConstraintSpec two_charge() { return {ConstraintKind::TwoCharge}; }
    static ConstraintSpec subblock(int p, int z) { return {ConstraintKind::Subblock, p, z}; }
    static ConstraintSpec rll(int d) { return {ConstraintKind::RllDInf, 0, 0, d}; }
    static ConstraintSpec odd_strict() { return {ConstraintKind::OddStrict}; }
    static ConstraintSpec odd_relaxed() { return {ConstraintKind::OddRelaxed}; }
    static ConstraintSpec even_strict() { return {ConstraintKind::EvenStrict}; }
    static ConstraintSpec fixed_weight(int i) { return {ConstraintKind::FixedWeight, 0, 0, 0, i}; }
    // The unconstrained set {0,1}^n.
    static ConstraintSpec full() { return {ConstraintKind::Full}; }

    // Throws InvalidParameter when the parameters do not fit blocklength n.
    void check(int n) const;
    bool has_orbits() const { return kind == ConstraintKind::TwoCharge || kind == ConstraintKind::Subblock; }
};

// Grammar: 2charge | subblock:p=<int>,z=<int> | rll:d=<int> | odd-strict | odd
//          | even-strict | weight:i=<int> | full
ConstraintSpec parse_constraint(const std::string& text);
std::string to_string(const ConstraintSpec& c);

inline constexpr int kMemberEnumCap = 22;

bool member(const ConstraintSpec& c, const BitWord& x);
BigInt cardinality(const ConstraintSpec& c, int n);
BigInt char_sum(const ConstraintSpec& c, const BitWord& s);
// Direct sum over enumerate_members; oracle for the closed forms.
BigInt char_sum_brute(const ConstraintSpec& c, const BitWord& s);

BigInt char_sum_two_charge(int n, const BitWord& s);
BigInt char_sum_subblock(int n, int p, int z, const BitWord& s);
BigInt char_sum_rll(int n, int d, const BitWord& s);
BigInt char_sum_even(int n, const BitWord& s);
BigInt char_sum_odd_strict(int n, const BitWord& s);
BigInt char_sum_odd_relaxed(int n, const BitWord& s);
BigInt char_sum_fixed_weight(int n, int i, const BitWord& s);

// b_0 = e_1 and b_i with ones at coordinates 2i and 2i+1.
std::vector<BitWord> two_charge_basis(int n);

std::vector<BitWord> enumerate_members(const ConstraintSpec& c, int n);
std::vector<char> member_indicator(const ConstraintSpec& c, int n);

struct OrbitStructure {
    ConstraintSpec constraint;
    int n = 0;
    std::vector<std::vector<int>> labels;
    std::vector<BigInt> sizes;
    std::vector<BitWord> reps;
    std::map<std::vector<int>, int> index;

    int count() const { return static_cast<int>(labels.size()); }
    std::vector<int> label_of(const BitWord& x) const;
    int orbit_of(const BitWord& x) const { return index.at(label_of(x)); }
};

OrbitStructure orbit_structure(const ConstraintSpec& c, int n);
BigInt orbit_char_sum(const OrbitStructure& st, int orbit, const BitWord& s_rep);
// All orbit sums at one s; the 2-charge path enumerates {0,1}^n once.
std::vector<BigInt> orbit_char_sums(const OrbitStructure& st, const BitWord& s_rep);

// Coordinate permutations generating the symmetry group used for the orbits;
// perm[i] is the image of 0-based coordinate i.
std::vector<std::vector<int>> orbit_generators(const ConstraintSpec& c, int n);
BitWord permute(const BitWord& x, const std::vector<int>& perm);

}  // namespace ccode

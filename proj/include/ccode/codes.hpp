#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "ccode/bitword.hpp"

namespace ccode {

inline constexpr int kDefaultEnumCap = 26;

// Rows of equal length over GF(2).
class BitMatrix {
public:
    BitMatrix() = default;
    explicit BitMatrix(int cols) : cols_(cols) {}
    BitMatrix(int cols, std::vector<BitWord> rows);

    int rows() const { return static_cast<int>(rows_.size()); }
    int cols() const { return cols_; }
    const BitWord& row(int i) const { return rows_[i]; }
    const std::vector<BitWord>& row_words() const { return rows_; }
    void push_back(const BitWord& w);

    bool get(int r, int c) const { return rows_[r].get(c); }

    static BitMatrix identity(int n);
    static BitMatrix zero(int rows, int cols);

private:
    int cols_ = 0;
    std::vector<BitWord> rows_;
};

int gf2_rank(const BitMatrix& m);

// Row-reduced echelon form with the pivot of each row at its lowest
// coordinate; every other row is zero at that pivot. Zero rows are dropped.
struct Echelon {
    std::vector<BitWord> rows;
    std::vector<int> pivots;

    // Clears pivot positions of w; the result is the lexicographically least
    // element of w + span(rows).
    BitWord reduce(BitWord w) const;
    bool in_span(const BitWord& w) const { return reduce(w).is_zero(); }
    // Coefficients (one per row) expressing w, or empty if w is not in the span.
    std::vector<int> coordinates(const BitWord& w) const;
};

Echelon echelon(const std::vector<BitWord>& rows, int n);

// Basis of the words orthogonal to every row.
std::vector<BitWord> null_space(const std::vector<BitWord>& rows, int n);

class BinaryLinearCode {
public:
    BinaryLinearCode() = default;

    // Throws InvalidParameter if the rows are not linearly independent.
    static BinaryLinearCode from_generator(int n, std::vector<BitWord> rows);
    static BinaryLinearCode from_parity_check(int n, std::vector<BitWord> rows);

    int n() const { return n_; }
    int k() const { return k_; }
    const BitMatrix& generator() const { return g_; }
    const BitMatrix& parity_check() const { return h_; }

    bool contains(const BitWord& w) const;
    bool same_row_space(const BinaryLinearCode& o) const;

private:
    int n_ = 0, k_ = 0;
    BitMatrix g_, h_;
};

BinaryLinearCode dual_code(const BinaryLinearCode& c);
BinaryLinearCode hamming_code(int m);
BinaryLinearCode simplex_code(int m);
BinaryLinearCode reed_muller(int m, int r);
BinaryLinearCode whole_space(int n);
BinaryLinearCode zero_code(int n);

// Gray-code walk over the message space; the first word is 0^n.
class CodewordStream {
public:
    explicit CodewordStream(const BinaryLinearCode& c, int cap = kDefaultEnumCap);
    bool next(BitWord& out);
    std::uint64_t total() const { return total_; }

private:
    std::vector<BitWord> basis_;
    BitWord cur_;
    std::uint64_t step_ = 0, total_ = 0;
};

// Calls fn on all 2^k codewords of the span of basis (Gray order, 0 first).
void for_each_in_span(const std::vector<BitWord>& basis, int n,
                      const std::function<void(const BitWord&)>& fn, int cap = kDefaultEnumCap);

std::vector<BitWord> enumerate_codewords(const BinaryLinearCode& c, int cap = kDefaultEnumCap);
std::vector<std::uint64_t> weight_histogram(const BinaryLinearCode& c, int cap = kDefaultEnumCap);

struct CosetDecomposition {
    BinaryLinearCode super_code;
    BinaryLinearCode sub_code;
    std::vector<BitWord> reps;  // sorted, reps[0] = 0^n
};

CosetDecomposition coset_decompose(const BinaryLinearCode& super_code,
                                   const BinaryLinearCode& sub_code, int cap = kDefaultEnumCap);
std::vector<std::uint64_t> coset_weight_enumerator(const BitWord& rep,
                                                   const BinaryLinearCode& sub_code,
                                                   int cap = kDefaultEnumCap);

// Where a code came from, when it is one of the named families.
struct CodeFamily {
    enum Kind { Other, Hamming, Simplex, ReedMuller } kind = Other;
    int m = 0, r = 0;
};

struct NamedCode {
    BinaryLinearCode code;
    CodeFamily family;
    std::string label;
};

// Grammar: rm:m=<int>,r=<int> | hamming:m=<int> | simplex:m=<int> | file:PATH
NamedCode parse_code_spec(const std::string& text);

BinaryLinearCode load_code(const std::string& path);
BinaryLinearCode parse_code(const std::string& text);
void save_code(const BinaryLinearCode& c, const std::string& path);
std::string format_code(const BinaryLinearCode& c);

}  // namespace ccode

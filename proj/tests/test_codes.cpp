#include <doctest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <random>
#include <set>

#include "ccode/codes.hpp"
#include "ccode/errors.hpp"
#include "oracle.hpp"

using namespace ccode;

namespace {

BitMatrix from_strings(std::initializer_list<const char*> rows) {
    std::vector<BitWord> w;
    for (const char* r : rows) w.push_back(BitWord::from_string(r));
    return BitMatrix(static_cast<int>(w.front().size()), w);
}

std::vector<std::uint64_t> as_ints(const std::vector<BitWord>& ws) {
    std::vector<std::uint64_t> out;
    for (const auto& w : ws) out.push_back(w.index());
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::uint64_t> weights_of(const std::vector<std::uint64_t>& words, int n) {
    std::vector<std::uint64_t> h(n + 1);
    for (auto w : words) ++h[std::popcount(w)];
    return h;
}

// checks G H^T = 0 and the rank/dimension arithmetic
void check_code_invariants(const BinaryLinearCode& c) {
    const auto& g = c.generator();
    const auto& h = c.parity_check();
    CHECK(g.rows() == c.k());
    CHECK(h.rows() == c.n() - c.k());
    CHECK(gf2_rank(g) == c.k());
    CHECK(gf2_rank(h) == c.n() - c.k());
    for (const auto& gr : g.row_words())
        for (const auto& hr : h.row_words()) CHECK(dot(gr, hr) == 0);
}

BinaryLinearCode random_code(std::mt19937_64& rng, int n, int k) {
    std::vector<BitWord> rows;
    while (static_cast<int>(rows.size()) < k) {
        BitWord w = BitWord::from_index(n, rng());
        auto trial = rows;
        trial.push_back(w);
        if (gf2_rank(BitMatrix(n, trial)) == static_cast<int>(trial.size())) rows = trial;
    }
    return BinaryLinearCode::from_generator(n, rows);
}

std::filesystem::path temp_file(const std::string& name) {
    return std::filesystem::temp_directory_path() / ("ccode_test_" + name);
}

}  // namespace

TEST_CASE("gf2_rank on small matrices") {
    CHECK(gf2_rank(BitMatrix::identity(3)) == 3);
    CHECK(gf2_rank(BitMatrix::zero(2, 5)) == 0);
    CHECK(gf2_rank(from_strings({"110", "011", "101"})) == 2);
}

TEST_CASE("dual codes of the named families") {
    const auto whole = whole_space(6);
    const auto d = dual_code(whole);
    CHECK(d.k() == 0);
    CHECK(d.n() == 6);

    const auto hd = dual_code(hamming_code(3));
    CHECK(hd.n() == 7);
    CHECK(hd.k() == 3);
    CHECK(hd.same_row_space(simplex_code(3)));

    CHECK(dual_code(reed_muller(4, 2)).same_row_space(reed_muller(4, 1)));
}

TEST_CASE("Hamming code parameters and columns") {
    const auto h3 = hamming_code(3);
    CHECK(h3.n() == 7);
    CHECK(h3.k() == 4);
    // column j of H is the binary expansion of j
    std::set<std::uint64_t> cols;
    for (int j = 0; j < 7; ++j) {
        std::uint64_t c = 0;
        for (int r = 0; r < h3.parity_check().rows(); ++r)
            if (h3.parity_check().get(r, j)) c |= std::uint64_t{1} << r;
        cols.insert(c);
    }
    CHECK(cols.size() == 7);
    CHECK(cols.count(0) == 0);

    const auto h4 = hamming_code(4);
    CHECK(h4.n() == 15);
    CHECK(h4.k() == 11);

    const auto h2 = hamming_code(2);
    CHECK(h2.n() == 3);
    CHECK(h2.k() == 1);
    CHECK(as_ints(enumerate_codewords(h2)) == std::vector<std::uint64_t>{0, 7});

    CHECK_THROWS_AS(hamming_code(1), InvalidParameter);
}

TEST_CASE("simplex code") {
    const auto s3 = enumerate_codewords(simplex_code(3));
    CHECK(s3.size() == 8);
    for (const auto& w : s3)
        if (!w.is_zero()) CHECK(w.weight() == 4);

    const auto s2 = as_ints(enumerate_codewords(simplex_code(2)));
    std::vector<std::uint64_t> expect;
    for (const char* s : {"000", "011", "101", "110"}) expect.push_back(oracle::from_str(s));
    std::sort(expect.begin(), expect.end());
    CHECK(s2 == expect);

    CHECK_THROWS_AS(simplex_code(1), InvalidParameter);
}

TEST_CASE("Reed-Muller codes") {
    const auto rm42 = reed_muller(4, 2);
    CHECK(rm42.n() == 16);
    CHECK(rm42.k() == 11);

    for (int m = 1; m <= 5; ++m) {
        const auto rep = as_ints(enumerate_codewords(reed_muller(m, 0)));
        const std::uint64_t all = (std::uint64_t{1} << (1 << m)) - 1;
        CHECK(rep == std::vector<std::uint64_t>{0, all});
    }

    // RM(3,1): the affine functions of three variables
    const auto words = as_ints(enumerate_codewords(reed_muller(3, 1)));
    CHECK(words.size() == 16);
    CHECK(weights_of(words, 8) == std::vector<std::uint64_t>{1, 0, 0, 0, 14, 0, 0, 0, 1});
    std::set<std::uint64_t> affine;
    for (int a = 0; a < 16; ++a) {
        std::uint64_t w = 0;
        for (int i = 0; i < 8; ++i) {
            // x_1 is the most significant bit of i
            const int x1 = (i >> 2) & 1, x2 = (i >> 1) & 1, x3 = i & 1;
            const int v = (a & 1) ^ (((a >> 1) & 1) & x1) ^ (((a >> 2) & 1) & x2) ^ (((a >> 3) & 1) & x3);
            if (v) w |= std::uint64_t{1} << i;
        }
        affine.insert(w);
    }
    CHECK(std::vector<std::uint64_t>(affine.begin(), affine.end()) == words);

    CHECK_THROWS_AS(reed_muller(3, 4), InvalidParameter);
    CHECK_THROWS_AS(reed_muller(3, -1), InvalidParameter);
}

TEST_CASE("codeword enumeration") {
    const auto z = enumerate_codewords(zero_code(5));
    REQUIRE(z.size() == 1);
    CHECK(z[0].is_zero());

    const auto h3 = enumerate_codewords(hamming_code(3));
    CHECK(h3.size() == 16);
    CHECK(weights_of(as_ints(h3), 7) == std::vector<std::uint64_t>{1, 0, 0, 7, 7, 0, 0, 1});
    CHECK(weight_histogram(hamming_code(3)) == std::vector<std::uint64_t>{1, 0, 0, 7, 7, 0, 0, 1});

    CHECK(enumerate_codewords(simplex_code(3)).size() == 8);

    CHECK_THROWS_AS(enumerate_codewords(whole_space(12), 10), CapExceeded);
}

TEST_CASE("enumeration yields 2^k distinct codewords in the null space of H") {
    std::mt19937_64 rng(7);
    std::vector<BinaryLinearCode> codes = {hamming_code(3), hamming_code(4), simplex_code(4),
                                           reed_muller(4, 2), reed_muller(5, 1)};
    for (int t = 0; t < 10; ++t) codes.push_back(random_code(rng, 6 + t % 7, 2 + t % 4));
    for (const auto& c : codes) {
        const auto ws = enumerate_codewords(c);
        CHECK(ws.size() == (std::size_t{1} << c.k()));
        const auto ints = as_ints(ws);
        CHECK(std::set<std::uint64_t>(ints.begin(), ints.end()).size() == ws.size());
        for (const auto& w : ws)
            for (const auto& h : c.parity_check().row_words()) CHECK(dot(w, h) == 0);
        CHECK(ws.front().is_zero());
        // independent span of the generator rows
        std::vector<std::uint64_t> rows;
        for (const auto& r : c.generator().row_words()) rows.push_back(r.index());
        auto sp = oracle::span(rows);
        std::sort(sp.begin(), sp.end());
        CHECK(sp == ints);
    }
}

TEST_CASE("constructed codes satisfy the generator/parity invariants") {
    for (int m = 2; m <= 6; ++m) {
        check_code_invariants(hamming_code(m));
        check_code_invariants(simplex_code(m));
        for (int r = 0; r <= m; ++r) check_code_invariants(reed_muller(m, r));
    }
    std::mt19937_64 rng(11);
    for (int t = 0; t < 30; ++t) {
        const int n = 2 + t % 13;
        const auto c = random_code(rng, n, 1 + t % n);
        check_code_invariants(c);
        CHECK(c.k() + dual_code(c).k() == c.n());
        CHECK(dual_code(dual_code(c)).same_row_space(c));
    }
}

TEST_CASE("coset decomposition") {
    const auto d = coset_decompose(reed_muller(1, 1), reed_muller(1, 0));
    REQUIRE(d.reps.size() == 2);
    CHECK(d.reps[0].str() == "00");
    CHECK(d.reps[1].str() == "01");

    const auto h = hamming_code(3);
    const auto self = coset_decompose(h, h);
    REQUIRE(self.reps.size() == 1);
    CHECK(self.reps[0].is_zero());

    const auto rm = coset_decompose(reed_muller(4, 2), reed_muller(4, 1));
    CHECK(rm.reps.size() == 64);
    // the cosets are disjoint and together cover the super code
    const auto sub = reed_muller(4, 1);
    std::set<std::uint64_t> covered;
    for (const auto& rep : rm.reps)
        for (const auto& w : enumerate_codewords(sub)) covered.insert((rep ^ w).index());
    CHECK(covered.size() == (std::size_t{1} << 11));
    for (const auto& rep : rm.reps) CHECK(reed_muller(4, 2).contains(rep));

    CHECK_THROWS_AS(coset_decompose(reed_muller(4, 1), reed_muller(4, 2)), StructureError);
    CHECK_THROWS_AS(coset_decompose(hamming_code(3), reed_muller(4, 1)), StructureError);
}

TEST_CASE("coset weight enumerators") {
    const auto rep_code = reed_muller(1, 0);
    CHECK(coset_weight_enumerator(BitWord::from_string("00"), rep_code) == std::vector<std::uint64_t>{1, 0, 1});
    CHECK(coset_weight_enumerator(BitWord::from_string("01"), rep_code) == std::vector<std::uint64_t>{0, 2, 0});
    CHECK(coset_weight_enumerator(BitWord(7), hamming_code(3)) ==
          std::vector<std::uint64_t>{1, 0, 0, 7, 7, 0, 0, 1});
}

TEST_CASE("code file round trip and errors") {
    const auto path = temp_file("h3.txt");
    save_code(hamming_code(3), path.string());
    CHECK(load_code(path.string()).same_row_space(hamming_code(3)));
    std::filesystem::remove(path);

    const auto parity = parse_code("# comment\nn=7 k=4 kind=parity\n0001111\n0110011\n1010101\n");
    CHECK(parity.same_row_space(hamming_code(3)));

    CHECK_THROWS_WITH_AS(parse_code("n=4 k=2 kind=generator\n1100\n1100\n"),
                         doctest::Contains("line 3"), ParseError);
    CHECK_THROWS_WITH_AS(parse_code("n=4 k=2 kind=generator\n1100\n110\n"), doctest::Contains("line 3"),
                         ParseError);
    CHECK_THROWS_AS(parse_code("n=4 k=2 kind=generator\n1100\n"), ParseError);
    CHECK_THROWS_AS(parse_code("n=4 k=1 kind=generator\n1102\n"), ParseError);
    CHECK_THROWS_AS(parse_code("k=1 n=4\n1100\n"), ParseError);
    CHECK_THROWS_AS(load_code("/nonexistent/dir/code.txt"), ParseError);
}

TEST_CASE("code grammar") {
    CHECK(parse_code_spec("rm:m=4,r=2").code.same_row_space(reed_muller(4, 2)));
    CHECK(parse_code_spec("hamming:m=3").family.kind == CodeFamily::Hamming);
    CHECK(parse_code_spec("simplex:m=3").code.k() == 3);
    CHECK_THROWS_AS(parse_code_spec("rm:m=4"), ParseError);
    CHECK_THROWS_AS(parse_code_spec("golay"), ParseError);
    CHECK_THROWS_AS(parse_code_spec("hamming:m=1"), InvalidParameter);

    const auto path = temp_file("rm31.txt");
    save_code(reed_muller(3, 1), path.string());
    CHECK(parse_code_spec("file:" + path.string()).code.same_row_space(reed_muller(3, 1)));
    std::filesystem::remove(path);
}

#include <doctest.h>

#include <cmath>

#include "ccode/bounds.hpp"
#include "ccode/errors.hpp"
#include "oracle.hpp"

using namespace ccode;

namespace {

constexpr double kTableTol = 5e-3;

std::vector<std::uint64_t> members(const ConstraintSpec& c, int n) {
    std::vector<std::uint64_t> out;
    for (const auto& w : enumerate_members(c, n)) out.push_back(w.index());
    return out;
}

}  // namespace

TEST_CASE("classic Delsarte program") {
    CHECK(del_classic(13, 5).lp_value == doctest::Approx(64.0).epsilon(1e-9));
    CHECK(del_classic(10, 7).lp_value == doctest::Approx(3.2).epsilon(1e-9));
    CHECK(del_classic(10, 3).lp_value == doctest::Approx(85.333).epsilon(1e-5));
    for (int n = 1; n <= 12; ++n) CHECK(del_classic(n, 1).lp_value == doctest::Approx(std::ldexp(1.0, n)));
    CHECK_THROWS_AS(del_classic(5, 6), InvalidParameter);
    CHECK_THROWS_AS(del_classic(5, 0), InvalidParameter);
}

TEST_CASE("per-word Delsarte program agrees with the classic one") {
    CHECK(del_full(3, 3).lp_value == doctest::Approx(2.0));
    for (int n = 1; n <= 8; ++n)
        for (int d = 1; d <= n; ++d) {
            CAPTURE(n);
            CAPTURE(d);
            CHECK(del_full(n, d).lp_value == doctest::Approx(del_classic(n, d).lp_value).epsilon(1e-6));
        }
    CHECK_THROWS_AS(del_full(3, 4), InvalidParameter);
    CHECK_THROWS_AS(del_full(13, 3), CapExceeded);
}

TEST_CASE("constrained programs") {
    CHECK(del_constrained(10, 4, ConstraintSpec::rll(2)).code_size_bound == doctest::Approx(21.721).epsilon(kTableTol / 21.721));
    CHECK(del_constrained(10, 2, ConstraintSpec::rll(1)).code_size_bound ==
          doctest::Approx(128.557).epsilon(kTableTol / 128.557));
    for (int n = 4; n <= 8; ++n)
        for (int d = 1; d <= n; ++d) {
            const auto r = del_constrained(n, d, ConstraintSpec::full());
            CHECK(r.code_size_bound == doctest::Approx(del_classic(n, d).lp_value).epsilon(1e-6));
            CHECK(r.lp_value == doctest::Approx(r.code_size_bound * r.code_size_bound).epsilon(1e-12));
        }
    CHECK_THROWS_AS(del_constrained(13, 3, ConstraintSpec::rll(1)), CapExceeded);
}

TEST_CASE("symmetrized programs") {
    CHECK(del_constrained_sym(13, 7, ConstraintSpec::two_charge()).code_size_bound ==
          doctest::Approx(5.657).epsilon(kTableTol / 5.657));
    CHECK(del_constrained_sym(18, 5, ConstraintSpec::subblock(2, 2)).code_size_bound ==
          doctest::Approx(227.111).epsilon(kTableTol / 227.111));
    CHECK_THROWS_AS(del_constrained_sym(10, 3, ConstraintSpec::rll(1)), InvalidParameter);
}

TEST_CASE("symmetrization does not change the optimum") {
    const std::vector<std::pair<ConstraintSpec, int>> cases = {{ConstraintSpec::two_charge(), 9},
                                                               {ConstraintSpec::two_charge(), 11},
                                                               {ConstraintSpec::subblock(2, 1), 8},
                                                               {ConstraintSpec::subblock(2, 1), 10}};
    for (const auto& [c, n] : cases)
        for (int d = 1; d <= n; ++d) {
            CAPTURE(n);
            CAPTURE(d);
            const double full = del_constrained(n, d, c).lp_value;
            const double sym = del_constrained_sym(n, d, c).lp_value;
            CHECK(std::abs(full - sym) <= 1e-5 * std::max(1.0, full));
        }
}

TEST_CASE("generalized sphere packing") {
    CHECK(gensph(13, 2, ConstraintSpec::two_charge()).lp_value == doctest::Approx(64.0));
    CHECK(gensph(13, 7, ConstraintSpec::two_charge()).lp_value == doctest::Approx(32.0));
    CHECK(gensph(15, 5, ConstraintSpec::subblock(3, 2)).lp_value == doctest::Approx(333.333).epsilon(1e-5));
    // radius zero: the cover must take every word of A
    for (const auto& c : {ConstraintSpec::rll(1), ConstraintSpec::rll(2), ConstraintSpec::even_strict()})
        CHECK(gensph(10, 2, c).lp_value == doctest::Approx(static_cast<double>(cardinality(c, 10))));
    CHECK_THROWS_AS(gensph(17, 3, ConstraintSpec::rll(1)), CapExceeded);
}

TEST_CASE("bounds are monotone in d and respect the proposition caps") {
    for (const auto& c : {ConstraintSpec::rll(1), ConstraintSpec::rll(2), ConstraintSpec::two_charge()}) {
        const int n = 9;
        const double size = static_cast<double>(cardinality(c, n));
        double prev_con = kInf, prev_del = kInf, prev_gs = kInf;
        for (int d = 1; d <= n; ++d) {
            const auto con = del_constrained(n, d, c);
            const double del = del_classic(n, d).lp_value;
            const double gs = gensph(n, d, c).lp_value;
            CHECK(con.code_size_bound <= size + 1e-6);
            CHECK(con.code_size_bound <= del + 1e-6);
            CHECK(con.lp_value <= prev_con + 1e-6);
            CHECK(del <= prev_del + 1e-6);
            CHECK(gs <= prev_gs + 1e-6);
            prev_con = con.lp_value;
            prev_del = del;
            prev_gs = gs;
        }
    }
}

TEST_CASE("the bound is never below a brute-force optimum") {
    const std::vector<std::pair<ConstraintSpec, int>> cases = {
        {ConstraintSpec::rll(1), 8},         {ConstraintSpec::rll(2), 9},         {ConstraintSpec::two_charge(), 9},
        {ConstraintSpec::subblock(2, 1), 8}, {ConstraintSpec::even_strict(), 8}, {ConstraintSpec::odd_relaxed(), 8}};
    for (const auto& [c, n] : cases) {
        const auto words = members(c, n);
        for (int d = 2; d <= n; ++d) {
            CAPTURE(n);
            CAPTURE(d);
            const int best = oracle::max_code_size(words, d);
            const auto r = del_constrained(n, d, c);
            CHECK(best <= std::floor(r.code_size_bound + 1e-6));
            CHECK(best <= std::floor(gensph(n, d, c).lp_value + 1e-6));
        }
    }
}

TEST_CASE("dual certificates") {
    const int n = 8, d = 3;
    const auto a = ConstraintSpec::rll(1);
    const double v = del_classic(n, d).lp_value;
    const double size = static_cast<double>(cardinality(a, n));

    std::vector<double> delta(1u << n, 0.0);
    delta[0] = std::ldexp(1.0, n);
    CHECK(dual_certificate_bound(n, d, a, delta) == doctest::Approx(std::ldexp(1.0, n) * std::min(v, size)));

    std::vector<double> flat(1u << n, 1.0);
    CHECK_THROWS_AS(dual_certificate_bound(n, d, a, flat), CertificateRejected);

    std::vector<double> unnormalized(1u << n, 0.0);
    unnormalized[0] = 1.0;
    CHECK_THROWS_AS(dual_certificate_bound(n, d, a, unnormalized), CertificateRejected);

    // the indicator of span(e_1..e_{d-1}) scaled to total 2^n: its transform is
    // nonnegative and it vanishes on words of weight >= d
    std::vector<double> beta(1u << n, 0.0);
    const double scale = std::ldexp(1.0, n - (d - 1));
    for (std::uint64_t x = 0; x < (1u << (d - 1)); ++x) beta[x] = scale;
    const double bound = dual_certificate_bound(n, d, a, beta);
    CHECK(bound == doctest::Approx(scale * std::min(v, size)));
    CHECK(bound + 1e-6 >= del_constrained(n, d, a).lp_value);

    CHECK_THROWS_AS(dual_certificate_bound(n, d, a, std::vector<double>(5, 1.0)), InvalidParameter);
}

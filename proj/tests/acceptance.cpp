// Acceptance run: one PASS/FAIL line per criterion. The process exits 0 when
// the set of failing criteria equals the --expect-fail list (default empty).

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ccode/bounds.hpp"
#include "ccode/counting.hpp"
#include "ccode/verify.hpp"
#include "tables.hpp"

using namespace ccode;

namespace {

constexpr double kTableTol = 5e-3;  // absolute, on bounds printed to 3 decimals
constexpr double kFormulaTol = 1e-9;

struct Outcome {
    bool pass = true;
    std::vector<std::string> notes;

    void fail(const std::string& what) {
        pass = false;
        notes.push_back(what);
    }
};

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.4f", v);
    return buf;
}

void compare_float(Outcome& o, const std::string& where, double got, double expect) {
    if (std::abs(got - expect) > kTableTol) o.fail(where + ": got " + fmt(got) + ", expected " + fmt(expect));
}

void compare_exact(Outcome& o, const std::string& where, const BigInt& got, const BigInt& expect) {
    if (got != expect) o.fail(where + ": got " + got.str() + ", expected " + expect.str());
}

Outcome criterion_1() {
    Outcome o;
    struct Row {
        int m, r;
        const char* rendered;
    };
    const Row rows[] = {{4, 2, "16"},      {4, 3, "128"},      {5, 3, "2048"},
                        {6, 4, "6.711e7"}, {7, 5, "1.441e17"}, {8, 6, "1.329e36"}};
    for (const auto& row : rows) {
        const BigInt got = count_in_code(reed_muller(row.m, row.r), ConstraintSpec::two_charge()).value;
        const std::string where = "RM(" + std::to_string(row.m) + "," + std::to_string(row.r) + ")";
        if (cli::scientific4(got.str()) != row.rendered)
            o.fail(where + ": rendered " + cli::scientific4(got.str()) + ", expected " + row.rendered);
    }
    // the small entries exactly
    compare_exact(o, "RM(4,2)", count_in_code(reed_muller(4, 2), ConstraintSpec::two_charge()).value, 16);
    compare_exact(o, "RM(6,4)", count_in_code(reed_muller(6, 4), ConstraintSpec::two_charge()).value, 67108864);
    return o;
}

Outcome criterion_2() {
    Outcome o;
    for (int m = 3; m <= 5; ++m) {
        const int n = (1 << m) - 1;
        compare_exact(o, "Ham_" + std::to_string(m), count_in_code(hamming_code(m), ConstraintSpec::two_charge()).value,
                      BigInt(1) << (n / 2 - 1));
    }
    return o;
}

Outcome criterion_3() {
    Outcome o;
    const std::vector<std::pair<std::string, BinaryLinearCode>> codes = {
        {"RM(4,2)", reed_muller(4, 2)}, {"RM(4,3)", reed_muller(4, 3)}, {"Ham_3", hamming_code(3)}, {"Ham_4", hamming_code(4)}};
    const long long rll[] = {83, 1292, 4, 101};
    const long long even[] = {198, 1597, 6, 116};
    for (std::size_t i = 0; i < codes.size(); ++i) {
        compare_exact(o, codes[i].first + " S^1", count_in_code(codes[i].second, ConstraintSpec::rll(1)).value, rll[i]);
        compare_exact(o, codes[i].first + " S_e*", count_in_code(codes[i].second, ConstraintSpec::even_strict()).value,
                      even[i]);
    }
    // odd-strict in Hamming codes against 2^{floor((2^m-1)/2)-m}
    for (int m = 2; m <= 5; ++m) {
        const auto rep = count_odd_in_code(parse_code_spec("hamming:m=" + std::to_string(m)), ConstraintSpec::odd_strict());
        const double printed = hamming_odd_strict_printed_formula(m);
        const double got = rep.count.convert_to<double>();
        if (std::abs(got - printed) > kFormulaTol)
            o.fail("Ham_" + std::to_string(m) + " S_o*: count " + rep.count.str() + ", closed form " + fmt(printed));
    }
    // odd in RM(m,r) against 2^{C(m-1,<=r-1)+1}-1
    for (int m = 2; m <= 5; ++m)
        for (int r = 1; r < m; ++r) {
            const auto rep = count_odd_in_code(
                parse_code_spec("rm:m=" + std::to_string(m) + ",r=" + std::to_string(r)), ConstraintSpec::odd_relaxed());
            BigInt dim = 0;
            for (int i = 0; i <= r - 1; ++i) dim += binomial(m - 1, i);
            compare_exact(o, "RM(" + std::to_string(m) + "," + std::to_string(r) + ") S_o", rep.count,
                          (BigInt(1) << (dim.convert_to<int>() + 1)) - 1);
        }
    return o;
}

Outcome criterion_4() {
    Outcome o;
    const long long expect[] = {1, 9, 0, 120, 0, 462, 0, 792, 0, 715, 0, 364, 0, 105, 0, 16, 0, 1};
    const auto w = weight_distribution(ConstraintSpec::even_strict(), 17);
    for (int i = 0; i <= 17; ++i) compare_exact(o, "a_" + std::to_string(i), w.counts[i], expect[i]);
    return o;
}

Outcome criterion_5() {
    Outcome o;
    const double sym[] = {64, 45.255, 45.255, 22.627, 17.889, 5.657, 4.619, 2.828, 2.619};
    const double gs[] = {64, 64, 64, 64, 64, 32, 32, 16, 16};
    const double del[] = {4096, 512, 292.571, 64, 40, 8, 5.333, 3.333, 2.857};
    const auto a = ConstraintSpec::two_charge();
    for (int d = 2; d <= 10; ++d) {
        const std::string at = " d=" + std::to_string(d);
        compare_float(o, "sym" + at, del_constrained_sym(13, d, a).code_size_bound, sym[d - 2]);
        compare_float(o, "gensph" + at, gensph(13, d, a).lp_value, gs[d - 2]);
        compare_float(o, "del" + at, del_classic(13, d).lp_value, del[d - 2]);
    }
    return o;
}

Outcome criterion_6() {
    Outcome o;
    const double sym3[] = {1000, 826.236, 826.236, 157.767, 110.851, 22.627};
    const double gs3[] = {1000, 1000, 1000, 333.333, 333.333, 166.667};
    const auto a3 = ConstraintSpec::subblock(3, 2);
    for (int d = 2; d <= 7; ++d) {
        const std::string at = " (15,3,2) d=" + std::to_string(d);
        compare_float(o, "sym" + at, del_constrained_sym(15, d, a3).code_size_bound, sym3[d - 2]);
        compare_float(o, "gensph" + at, gensph(15, d, a3).lp_value, gs3[d - 2]);
    }
    const double sym4[] = {556.38, 556.38, 227.111, 165.247, 38.118, 28.540, 4.472};
    const auto a4 = ConstraintSpec::subblock(2, 2);
    for (int d = 3; d <= 9; ++d)
        compare_float(o, "sym (18,2,2) d=" + std::to_string(d), del_constrained_sym(18, d, a4).code_size_bound,
                      sym4[d - 3]);
    return o;
}

Outcome criterion_7() {
    Outcome o;
    const double con2[] = {49.578, 32.075, 21.721, 7.856, 4.899, 2.529};
    const double con1[] = {128.557, 74.762, 42.048, 12, 6, 3.2};
    const double gs2[] = {60, 46.5, 46.5, 34, 34, 19};
    const double gs1[] = {144, 111, 111, 63, 63, 26};
    const double del[] = {512, 85.333, 42.667, 12, 6, 3.2};
    for (int d = 2; d <= 7; ++d) {
        const std::string at = " d=" + std::to_string(d);
        compare_float(o, "S^2" + at, del_constrained(10, d, ConstraintSpec::rll(2)).code_size_bound, con2[d - 2]);
        compare_float(o, "S^1" + at, del_constrained(10, d, ConstraintSpec::rll(1)).code_size_bound, con1[d - 2]);
        compare_float(o, "gensph S^2" + at, gensph(10, d, ConstraintSpec::rll(2)).lp_value, gs2[d - 2]);
        compare_float(o, "gensph S^1" + at, gensph(10, d, ConstraintSpec::rll(1)).lp_value, gs1[d - 2]);
        compare_float(o, "del" + at, del_classic(10, d).lp_value, del[d - 2]);
    }
    return o;
}

Outcome criterion_8() {
    Outcome o;
    VerifyOptions opt;
    for (const auto& name : verify_suite_names()) {
        const auto r = run_verify_suite(name, opt);
        std::ostringstream line;
        line << name << " " << (r.passed ? "pass" : "FAIL") << " " << r.checks << " checks " << fmt(r.seconds) << " s";
        if (!r.passed) o.fail(line.str() + ": " + r.counterexample);
        else if (r.seconds >= 120.0) o.fail(line.str() + ": over the 120 s limit");
        else o.notes.push_back(line.str());
    }
    return o;
}

std::set<int> parse_list(const std::string& s) {
    std::set<int> out;
    std::stringstream in(s);
    std::string tok;
    while (std::getline(in, tok, ','))
        if (!tok.empty()) out.insert(std::stoi(tok));
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Acceptance criteria"};
    std::string expect_fail;
    std::string only;
    app.add_option("--expect-fail", expect_fail, "Comma list of criteria known to fail");
    app.add_option("--only", only, "Comma list of criteria to run");
    CLI11_PARSE(app, argc, argv);

    struct Criterion {
        int id;
        const char* title;
        double limit_s;
        std::function<Outcome()> run;
    };
    const std::vector<Criterion> criteria = {
        {1, "2-charge counts in Reed-Muller codes", 60, criterion_1},
        {2, "2-charge counts in Hamming codes", 10, criterion_2},
        {3, "RLL, even and odd counts in small codes", 30, criterion_3},
        {4, "even-strict weight distribution at n=17", 60, criterion_4},
        {5, "2-charge bounds at n=13", 120, criterion_5},
        {6, "subblock bounds at (15,3,2) and (18,2,2)", 120, criterion_6},
        {7, "RLL bounds at n=10", 180, criterion_7},
        {8, "property suites", 6 * 120, criterion_8},
    };

    const std::set<int> selected = parse_list(only);
    std::set<int> failed;
    for (const auto& c : criteria) {
        if (!selected.empty() && !selected.count(c.id)) continue;
        const auto t0 = std::chrono::steady_clock::now();
        Outcome o = c.run();
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (secs >= c.limit_s) o.fail("runtime " + fmt(secs) + " s over the " + fmt(c.limit_s) + " s limit");
        std::printf("criterion %d: %s (%.1f s, limit %.0f s) %s\n", c.id, o.pass ? "PASS" : "FAIL", secs, c.limit_s,
                    c.title);
        for (const auto& note : o.notes) std::printf("    %s\n", note.c_str());
        std::fflush(stdout);
        if (!o.pass) failed.insert(c.id);
    }

    const std::set<int> expected = parse_list(expect_fail);
    std::string list;
    for (int id : failed) list += (list.empty() ? "" : ",") + std::to_string(id);
    std::printf("failed criteria: %s\n", list.empty() ? "none" : list.c_str());
    if (failed == expected) {
        if (!expected.empty()) std::printf("failures match the expected list\n");
        return 0;
    }
    std::printf("failures differ from the expected list\n");
    return 1;
}

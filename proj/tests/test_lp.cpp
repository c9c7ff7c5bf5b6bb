#include <doctest.h>

#include <cmath>
#include <sstream>
#include <string>

#include "ccode/bounds.hpp"
#include "ccode/errors.hpp"
#include "ccode/lp.hpp"

using namespace ccode;

namespace {

struct Fixture {
    const char* text;
    const char* status;
    double value;
};

const Fixture kFixtures[] = {
#include "lp_fixtures.inc"
};

double parse_num(const std::string& tok) {
    if (tok == "inf") return kInf;
    if (tok == "-inf") return -kInf;
    return std::stod(tok);
}

// reader for the dump format written by write_lp_dump
LpModel read_dump(const std::string& text) {
    std::istringstream in(text);
    std::string line, tok;
    std::getline(in, line);
    int vars = 0, rows = 0;
    {
        std::istringstream h(line);
        std::string hash, v, r;
        h >> hash >> v >> vars >> r >> rows;
    }
    std::getline(in, line);
    std::istringstream obj(line);
    obj >> tok;
    LpModel m(vars, tok == "max" ? Sense::Maximize : Sense::Minimize);
    for (int j = 0; j < vars; ++j) {
        obj >> tok;
        m.objective[j] = parse_num(tok);
    }
    for (int i = 0; i < rows; ++i) {
        std::getline(in, line);
        std::istringstream r(line);
        std::vector<double> coef(vars);
        for (auto& c : coef) {
            r >> tok;
            c = parse_num(tok);
        }
        std::string rel;
        r >> rel >> tok;
        m.add_row(coef, rel == "<=" ? Relation::Le : rel == ">=" ? Relation::Ge : Relation::Eq, parse_num(tok));
    }
    while (std::getline(in, line)) {
        std::istringstream b(line);
        std::string kw, lo, hi;
        int j = 0;
        b >> kw >> j >> lo >> hi;
        m.lower[j] = parse_num(lo);
        m.upper[j] = parse_num(hi);
    }
    return m;
}

double objective_at(const LpModel& m, const std::vector<double>& x) {
    double v = 0.0;
    for (int j = 0; j < m.num_vars(); ++j) v += m.objective[j] * x[j];
    return v;
}

LpSolution solve_with(const LpModel& m, int engine) {
    LpOptions o;
    if (engine == 0) o.algorithm = LpAlgorithm::Tableau;
    if (engine == 1) o.algorithm = LpAlgorithm::Revised;
    return engine == 2 ? solve_long_double(m, o) : solve(m, o);
}

}  // namespace

TEST_CASE("trivial programs") {
    for (int engine = 0; engine < 3; ++engine) {
        LpModel m(1);
        m.objective = {1.0};
        m.add_row({1.0}, Relation::Le, 3.0);
        const auto s = solve_with(m, engine);
        CHECK(s.status == LpStatus::Optimal);
        CHECK(s.value == doctest::Approx(3.0));

        LpModel inf(1);
        inf.objective = {1.0};
        inf.add_row({1.0}, Relation::Le, -1.0);
        CHECK(solve_with(inf, engine).status == LpStatus::Infeasible);

        LpModel unb(2);
        unb.objective = {1.0, 1.0};
        unb.add_row({1.0, -1.0}, Relation::Le, 1.0);
        CHECK(solve_with(unb, engine).status == LpStatus::Unbounded);
    }
}

TEST_CASE("textbook program") {
    LpModel m(2);
    m.objective = {3.0, 5.0};
    m.add_row({1.0, 0.0}, Relation::Le, 4.0);
    m.add_row({0.0, 2.0}, Relation::Le, 12.0);
    m.add_row({3.0, 2.0}, Relation::Le, 18.0);
    for (int engine = 0; engine < 3; ++engine) {
        const auto s = solve_with(m, engine);
        REQUIRE(s.status == LpStatus::Optimal);
        CHECK(s.value == doctest::Approx(36.0));
        CHECK(s.primal[0] == doctest::Approx(2.0));
        CHECK(s.primal[1] == doctest::Approx(6.0));
    }
    LpModel mn(2, Sense::Minimize);
    mn.objective = {1.0, 1.0};
    mn.add_row({1.0, 2.0}, Relation::Ge, 4.0);
    mn.add_row({3.0, 1.0}, Relation::Ge, 6.0);
    mn.add_row({1.0, 1.0}, Relation::Eq, 2.8);
    for (int engine = 0; engine < 3; ++engine) {
        const auto s = solve_with(mn, engine);
        REQUIRE(s.status == LpStatus::Optimal);
        CHECK(s.value == doctest::Approx(2.8));
    }
}

TEST_CASE("model validation") {
    LpModel m(2);
    m.objective = {1.0, 1.0};
    m.rows.push_back({{1.0}, Relation::Le, 1.0});
    CHECK_THROWS_AS(m.validate(), InvalidParameter);
    LpModel nan(1);
    nan.objective = {std::nan("")};
    CHECK_THROWS_AS(nan.validate(), InvalidParameter);
}

TEST_CASE("unbounded program with a free-ish lower bound") {
    const LpModel m = read_dump(R"(# vars 6 rows 3
max 2 -2 1 -1 0 0
-3 0 3 1 3 1 <= 4
1 -2 -2 -2 1 0 >= 2
1 1 2 -1 -3 2 <= -4
bound 1 -1 inf
bound 3 0 2
bound 4 -2 inf
bound 5 0 0)");
    // a feasible point and an improving ray, checked by hand
    const std::vector<double> x = {0, -1, 0, 0, 1, 0};
    CHECK(max_violation(m, x) == 0.0);
    const std::vector<double> ray = {1, 0, 0, 0, 1, 0};
    std::vector<double> far(6);
    for (int j = 0; j < 6; ++j) far[j] = x[j] + 1000.0 * ray[j];
    CHECK(max_violation(m, far) == 0.0);
    CHECK(objective_at(m, far) > objective_at(m, x));
    for (int engine = 0; engine < 3; ++engine) CHECK(solve_with(m, engine).status == LpStatus::Unbounded);
}

TEST_CASE("reference programs from an independent solver") {
    int index = 0;
    for (const auto& f : kFixtures) {
        const LpModel m = read_dump(f.text);
        for (int engine = 0; engine < 3; ++engine) {
            CAPTURE(index);
            CAPTURE(engine);
            const auto s = solve_with(m, engine);
            CHECK(to_string(s.status) == f.status);
            if (s.status == LpStatus::Optimal) {
                CHECK(s.value == doctest::Approx(f.value).epsilon(1e-7));
                CHECK(max_violation(m, s.primal) <= 1e-7);
                CHECK(objective_at(m, s.primal) == doctest::Approx(s.value).epsilon(1e-9));
            }
        }
        ++index;
    }
}

TEST_CASE("dump round trip") {
    const LpModel m = del_classic_model(7, 3);
    std::ostringstream out;
    write_lp_dump(m, out);
    const LpModel back = read_dump(out.str());
    CHECK(back.num_vars() == m.num_vars());
    CHECK(back.num_rows() == m.num_rows());
    CHECK(solve(back).value == doctest::Approx(solve(m).value).epsilon(1e-12));
}

TEST_CASE("engines agree on the bound programs") {
    for (const LpModel& m : {del_classic_model(13, 5), del_full_model(6, 3),
                             del_constrained_sym_model(13, 5, ConstraintSpec::two_charge(), 64.0),
                             del_constrained_model(8, 3, ConstraintSpec::rll(1), del_classic(8, 3).lp_value)}) {
        const auto a = solve_with(m, 0), b = solve_with(m, 1), c = solve_with(m, 2);
        REQUIRE(a.status == LpStatus::Optimal);
        REQUIRE(b.status == LpStatus::Optimal);
        REQUIRE(c.status == LpStatus::Optimal);
        CHECK(b.value == doctest::Approx(a.value).epsilon(1e-8));
        CHECK(c.value == doctest::Approx(a.value).epsilon(1e-8));
        CHECK(max_violation(m, a.primal) <= 1e-7);
        CHECK(max_violation(m, b.primal) <= 1e-7);
    }
}

TEST_CASE("iteration limit is reported, never a wrong optimum") {
    LpOptions o;
    o.max_iterations = 1;
    const auto s = solve(del_classic_model(13, 5), o);
    CHECK(s.status == LpStatus::IterationLimit);
}

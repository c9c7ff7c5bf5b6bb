// Command-line front end: count, weight-dist, bound, fourier, table, verify.

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cmath>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "ccode/bounds.hpp"
#include "ccode/codes.hpp"
#include "ccode/constraints.hpp"
#include "ccode/counting.hpp"
#include "ccode/errors.hpp"
#include "ccode/spectral.hpp"
#include "ccode/verify.hpp"
#include "tables.hpp"

using json = nlohmann::ordered_json;
using namespace ccode;
using namespace ccode::cli;

namespace {

enum Exit { kOk = 0, kFail = 1, kUsage = 2, kCap = 3, kSolver = 4 };

struct Output {
    json inputs = json::object();
    json result = json::object();
    std::string provenance;
    std::vector<std::pair<std::string, std::string>> text;  // key/value lines
    std::string text_block;                                 // free-form text, printed after the lines
    std::vector<std::string> csv_header;
    std::vector<std::vector<std::string>> csv_rows;
};

struct Common {
    std::string format = "text";
    bool no_timing = false;
};

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

void emit(const Output& out, const Common& common, double ms) {
    if (common.format == "json") {
        json doc;
        doc["inputs"] = out.inputs;
        doc["result"] = out.result;
        doc["provenance"] = out.provenance;
        doc["timing_ms"] = common.no_timing ? json(nullptr) : json(std::round(ms * 1000.0) / 1000.0);
        std::cout << doc.dump(2) << "\n";
    } else if (common.format == "csv") {
        for (std::size_t i = 0; i < out.csv_header.size(); ++i)
            std::cout << (i ? "," : "") << csv_escape(out.csv_header[i]);
        std::cout << "\n";
        for (const auto& row : out.csv_rows) {
            for (std::size_t i = 0; i < row.size(); ++i) std::cout << (i ? "," : "") << csv_escape(row[i]);
            std::cout << "\n";
        }
    } else {
        std::size_t width = 0;
        for (const auto& [k, v] : out.text) width = std::max(width, k.size());
        for (const auto& [k, v] : out.text) std::cout << std::left << std::setw(static_cast<int>(width) + 2) << k << v << "\n";
        std::cout << out.text_block;
    }
}

void add_common(CLI::App* sub, Common& common) {
    sub->add_option("--format", common.format, "Output format")->check(CLI::IsMember({"text", "json", "csv"}));
    sub->add_flag("--no-timing", common.no_timing, "Write timing_ms as null so JSON output is byte-stable");
}

// Single-row CSV from the text key/value lines.
void csv_from_text(Output& out) {
    out.csv_header.clear();
    std::vector<std::string> row;
    for (const auto& [k, v] : out.text) {
        out.csv_header.push_back(k);
        row.push_back(v);
    }
    out.csv_rows = {row};
}

// count

struct CountArgs {
    std::string code, constraint, method = "auto";
    int cap = kDefaultEnumCap;
};

int run_count(const CountArgs& a, Output& out) {
    const NamedCode code = parse_code_spec(a.code);
    const ConstraintSpec c = parse_constraint(a.constraint);
    const CountMethod method = parse_count_method(a.method);
    out.inputs = {{"code", a.code}, {"constraint", a.constraint}, {"method", a.method}, {"cap", a.cap}};
    const auto res = count_in_code(code.code, c, method, a.cap);
    const std::string count = res.value.str();
    out.result = {{"code", code.label}, {"constraint", to_string(c)}, {"n", code.code.n()}, {"k", code.code.k()},
                  {"count", count}, {"method", to_string(res.method)}};
    out.text = {{"code", code.label}, {"constraint", to_string(c)}, {"n", std::to_string(code.code.n())},
                {"k", std::to_string(code.code.k())}, {"count", count}, {"method", to_string(res.method)}};
    if (res.method == CountMethod::DualSum) {
        out.result["dual_dimension_used"] = res.dual_dimension_used;
        out.text.emplace_back("dual_dimension_used", std::to_string(res.dual_dimension_used));
    }
    const bool odd = c.kind == ConstraintKind::OddStrict || c.kind == ConstraintKind::OddRelaxed;
    if (odd && code.family.kind != CodeFamily::Other) {
        const auto rep = count_odd_in_code(code, c);
        if (rep.predicted) {
            out.result["closed_form"] = rep.predicted->str();
            out.result["closed_form_expression"] = rep.formula;
            out.text.emplace_back("closed_form", rep.predicted->str() + "  (" + rep.formula + ")");
        }
    }
    out.provenance = "count_in_code";
    csv_from_text(out);
    return kOk;
}

// weight-dist

struct WeightArgs {
    std::string code, constraint;
    int n = 0;
};

int run_weight_dist(const WeightArgs& a, Output& out) {
    WeightDistribution w;
    out.inputs = json::object();
    if (!a.code.empty()) out.inputs["code"] = a.code;
    if (!a.constraint.empty()) out.inputs["constraint"] = a.constraint;
    if (a.n) out.inputs["n"] = a.n;
    if (!a.code.empty()) {
        const NamedCode code = parse_code_spec(a.code);
        if (a.n && a.n != code.code.n()) throw InvalidParameter("--n does not match the code length");
        if (a.constraint.empty()) {
            w = code_weight_distribution(code.code);
            out.provenance = "code_weight_distribution";
        } else {
            w = constrained_weight_distribution(code.code, parse_constraint(a.constraint));
            out.provenance = "constrained_weight_distribution";
        }
    } else {
        if (a.constraint.empty() || a.n <= 0) throw InvalidParameter("weight-dist needs --constraint and --n, or --code");
        w = weight_distribution(parse_constraint(a.constraint), a.n);
        out.provenance = "weight_distribution";
    }
    json counts = json::array();
    std::ostringstream line;
    out.csv_header = {"weight", "count"};
    for (std::size_t i = 0; i < w.counts.size(); ++i) {
        counts.push_back(w.counts[i].str());
        line << (i ? " " : "") << w.counts[i];
        out.csv_rows.push_back({std::to_string(i), w.counts[i].str()});
    }
    out.result = {{"n", w.n}, {"counts", counts}, {"total", w.total().str()}};
    out.text = {{"n", std::to_string(w.n)}, {"counts", line.str()}, {"total", w.total().str()}};
    return kOk;
}

// bound

struct BoundArgs {
    int n = 0, d = 0;
    std::string constraint, lp = "auto", dump, algorithm = "auto";
};

LpAlgorithm parse_algorithm(const std::string& s) {
    if (s == "tableau") return LpAlgorithm::Tableau;
    if (s == "revised") return LpAlgorithm::Revised;
    return LpAlgorithm::Auto;
}

int run_bound(const BoundArgs& a, Output& out) {
    out.inputs = {{"n", a.n}, {"d", a.d}, {"lp", a.lp}};
    if (!a.constraint.empty()) out.inputs["constraint"] = a.constraint;
    BoundOptions opt;
    opt.dump_path = a.dump;
    opt.lp.algorithm = parse_algorithm(a.algorithm);
    BoundReport rep;
    if (a.constraint.empty()) {
        if (a.lp == "del-sym" || a.lp == "gensph")
            throw InvalidParameter("--lp " + a.lp + " needs --constraint");
        rep = del_classic(a.n, a.d, opt);
    } else {
        const ConstraintSpec c = parse_constraint(a.constraint);
        c.check(a.n);
        if (a.lp == "del")
            rep = del_constrained(a.n, a.d, c, opt);
        else if (a.lp == "del-sym")
            rep = del_constrained_sym(a.n, a.d, c, opt);
        else if (a.lp == "gensph")
            rep = gensph(a.n, a.d, c, opt);
        else
            rep = c.has_orbits() ? del_constrained_sym(a.n, a.d, c, opt) : del_constrained(a.n, a.d, c, opt);
        if (a.lp == "all") {
            const auto g = gensph(a.n, a.d, c);
            const auto del = del_classic(a.n, a.d);
            if (g.status != LpStatus::Optimal || del.status != LpStatus::Optimal)
                throw SolverLimit("comparator LP did not reach optimality");
            rep.gensph = g.code_size_bound;
            rep.delsarte = del.lp_value;
        }
    }
    if (rep.status != LpStatus::Optimal) throw SolverLimit("LP ended with status " + to_string(rep.status));
    out.result = {{"n", rep.n},
                  {"d", rep.d},
                  {"constraint", rep.constraint ? to_string(*rep.constraint) : "none"},
                  {"program", rep.program},
                  {"status", to_string(rep.status)},
                  {"lp_value", rep.lp_value},
                  {"code_size_bound", rep.code_size_bound},
                  {"iterations", rep.iterations},
                  {"lp_rows", rep.lp_rows},
                  {"lp_cols", rep.lp_cols}};
    out.text = {{"program", rep.program},
                {"constraint", rep.constraint ? to_string(*rep.constraint) : "none"},
                {"n", std::to_string(rep.n)},
                {"d", std::to_string(rep.d)},
                {"lp_value", fixed3(rep.lp_value)},
                {"code_size_bound", fixed3(rep.code_size_bound)}};
    if (rep.gensph) {
        out.result["gensph"] = *rep.gensph;
        out.text.emplace_back("gensph", fixed3(*rep.gensph));
    }
    if (rep.delsarte) {
        out.result["delsarte"] = *rep.delsarte;
        out.text.emplace_back("delsarte", fixed3(*rep.delsarte));
    }
    out.provenance = rep.program == "del" ? "del_classic"
                     : rep.program == "del-full" ? "del_full"
                     : rep.program == "del-constrained" ? "del_constrained"
                     : rep.program == "del-sym" ? "del_constrained_sym"
                     : "gensph";
    if (rep.gensph) out.provenance += " + gensph + del_classic";
    csv_from_text(out);
    return kOk;
}

// fourier

struct FourierArgs {
    std::string constraint;
    int n = 0;
    std::vector<std::string> words;
    bool all = false;
};

int run_fourier(const FourierArgs& a, Output& out) {
    const ConstraintSpec c = parse_constraint(a.constraint);
    c.check(a.n);
    out.inputs = {{"constraint", a.constraint}, {"n", a.n}};
    const std::string card = cardinality(c, a.n).str();
    out.result = {{"constraint", to_string(c)}, {"n", a.n}, {"cardinality", card}};
    out.text = {{"constraint", to_string(c)}, {"n", std::to_string(a.n)}, {"cardinality", card}};
    out.csv_header = {"s", "F(s)"};
    if (!a.words.empty() || a.all) {
        std::vector<BitWord> ws;
        if (a.all) {
            if (a.n > 16) throw CapExceeded("--all lists 2^n coefficients and is limited to n <= 16");
            for (std::uint64_t s = 0; s < (std::uint64_t{1} << a.n); ++s) ws.push_back(BitWord::from_index(a.n, s));
            out.inputs["all"] = true;
        } else {
            out.inputs["s"] = a.words;
            for (const auto& w : a.words) {
                if (static_cast<int>(w.size()) != a.n)
                    throw InvalidParameter("word '" + w + "' does not have length " + std::to_string(a.n));
                ws.push_back(BitWord::from_string(w));
            }
        }
        json vals = json::array();
        for (const auto& w : ws) {
            const BigInt f = char_sum(c, w);
            if (a.all && f == 0) continue;
            vals.push_back({{"s", w.str()}, {"F", f.str()}});
            out.text.emplace_back("F(" + w.str() + ")", f.str());
            out.csv_rows.push_back({w.str(), f.str()});
        }
        out.result["coefficients"] = vals;
        out.provenance = "char_sum";
    } else {
        if (a.n > 26) throw CapExceeded("weight-class sums enumerate 2^n words; n is limited to 26");
        const auto sums = weight_class_sums([&](const BitWord& s) { return char_sum(c, s); }, a.n);
        json vals = json::array();
        out.csv_header = {"weight", "W"};
        for (std::size_t j = 0; j < sums.size(); ++j) {
            vals.push_back(sums[j].str());
            out.text.emplace_back("W(" + std::to_string(j) + ")", sums[j].str());
            out.csv_rows.push_back({std::to_string(j), sums[j].str()});
        }
        out.result["weight_class_sums"] = vals;
        out.provenance = "weight_class_sums over char_sum";
    }
    return kOk;
}

// table

int run_table(const std::string& id, Output& out) {
    const TableArtifact t = build_table(id);
    out.inputs = {{"id", id}};
    out.provenance = "recomputed cell by cell; see each cell's provenance";
    json cells = json::array();
    out.csv_header = {"row", "column", "value", "expected", "status", "provenance", "note"};
    for (const auto& c : t.cells) {
        json cell = {{"row", c.row}, {"column", c.column}, {"value", c.value}, {"expected", c.expected},
                     {"status", to_string(c.status)}, {"provenance", c.provenance}};
        if (!c.exact.empty()) cell["exact"] = c.exact;
        if (c.is_float && c.status != CellStatus::Skipped) cell["numeric"] = c.numeric;
        if (!c.note.empty()) cell["note"] = c.note;
        cells.push_back(cell);
        out.csv_rows.push_back({c.row, c.column, c.exact.empty() ? c.value : c.exact, c.expected,
                                to_string(c.status), c.provenance, c.note});
    }
    out.result = {{"id", t.id}, {"caption", t.caption}, {"rows", t.rows}, {"columns", t.columns},
                  {"cells", cells}, {"mismatches", t.mismatches()}, {"skipped", t.skipped()}};

    // text grid: each cell shows the value, flagged when it disagrees with the source table
    std::vector<std::vector<std::string>> grid;
    grid.push_back({""});
    for (const auto& col : t.columns) grid[0].push_back(col);
    for (const auto& row : t.rows) {
        std::vector<std::string> line{row};
        for (const auto& col : t.columns) {
            const TableCell* c = t.find(row, col);
            std::string s = c ? c->value : "";
            if (c && c->status == CellStatus::Mismatch) s += " [MISMATCH: " + c->expected + "]";
            if (c && c->status == CellStatus::Skipped) s = "SKIPPED";
            line.push_back(s);
        }
        grid.push_back(line);
    }
    std::vector<std::size_t> width(grid[0].size(), 0);
    for (const auto& line : grid)
        for (std::size_t i = 0; i < line.size(); ++i) width[i] = std::max(width[i], line[i].size());
    std::ostringstream os;
    os << "Table " << t.id << ": " << t.caption << "\n";
    for (const auto& line : grid) {
        for (std::size_t i = 0; i < line.size(); ++i)
            os << std::left << std::setw(static_cast<int>(width[i]) + 2) << line[i];
        os << "\n";
    }
    for (const auto& c : t.cells)
        if (c.status == CellStatus::Skipped) os << "skipped " << c.row << " / " << c.column << ": " << c.note << "\n";
    os << "cells " << t.cells.size() << ", mismatches " << t.mismatches() << ", skipped " << t.skipped() << "\n";
    out.text_block = os.str();
    return t.mismatches() ? kFail : kOk;
}

// verify

struct VerifyArgs {
    int max_n = 32;
    std::vector<std::string> suites;
    bool inject = false;
    std::uint64_t seed = VerifyOptions{}.seed;
};

int run_verify_cmd(const VerifyArgs& a, Output& out) {
    VerifyOptions opt;
    opt.max_n = a.max_n;
    opt.suites = a.suites;
    opt.inject_fault = a.inject;
    opt.seed = a.seed;
    out.inputs = {{"max_n", a.max_n}, {"suites", a.suites}, {"seed", a.seed}, {"inject_fault", a.inject}};
    const auto results = run_verify(opt);
    json suites = json::array();
    std::ostringstream os;
    bool ok = true;
    out.csv_header = {"suite", "status", "checks", "counterexample"};
    for (const auto& r : results) {
        ok = ok && r.passed;
        json s = {{"suite", r.name}, {"passed", r.passed}, {"checks", r.checks}};
        if (!r.passed) s["counterexample"] = r.counterexample;
        suites.push_back(s);
        os << (r.passed ? "PASS " : "FAIL ") << r.name << " (" << r.checks << " checks, " << std::fixed
           << std::setprecision(1) << r.seconds << " s)\n";
        if (!r.passed) os << "  counterexample: " << r.counterexample << "\n";
        out.csv_rows.push_back({r.name, r.passed ? "PASS" : "FAIL", std::to_string(r.checks), r.counterexample});
    }
    out.result = {{"passed", ok}, {"suites", suites}};
    os << (ok ? "all suites passed\n" : "verification FAILED\n");
    out.text_block = os.str();
    out.provenance = "run_verify";
    return ok ? kOk : kFail;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Constrained codewords in linear codes and LP bounds on constrained codes"};
    app.require_subcommand(1);
    Common common;

    CountArgs ca;
    auto* count = app.add_subcommand("count", "Count constrained codewords in a linear code");
    count->add_option("--code", ca.code, "rm:m=<int>,r=<int> | hamming:m=<int> | simplex:m=<int> | file:PATH")->required();
    count->add_option("--constraint", ca.constraint, "Constraint grammar, e.g. rll:d=1")->required();
    count->add_option("--method", ca.method)->check(CLI::IsMember({"auto", "dual", "direct", "brute"}));
    count->add_option("--cap", ca.cap, "Enumeration cap in message bits")->check(CLI::Range(1, 40));
    add_common(count, common);

    WeightArgs wa;
    auto* weight = app.add_subcommand("weight-dist", "Weight distribution of a constrained set, optionally inside a code");
    weight->add_option("--constraint", wa.constraint);
    weight->add_option("--n", wa.n)->check(CLI::Range(1, 256));
    weight->add_option("--code", wa.code);
    add_common(weight, common);

    BoundArgs ba;
    auto* bound = app.add_subcommand("bound", "LP upper bound on the size of a distance-d (constrained) code");
    bound->add_option("--n", ba.n)->required()->check(CLI::Range(1, 256));
    bound->add_option("--d", ba.d)->required()->check(CLI::Range(1, 256));
    bound->add_option("--constraint", ba.constraint);
    bound->add_option("--lp", ba.lp, "Program")->check(CLI::IsMember({"auto", "del", "del-sym", "gensph", "all"}));
    bound->add_option("--lp-dump", ba.dump, "Write the LP model to this path");
    bound->add_option("--algorithm", ba.algorithm, "Simplex engine")->check(CLI::IsMember({"auto", "tableau", "revised"}));
    add_common(bound, common);

    FourierArgs fa;
    auto* fourier = app.add_subcommand("fourier", "Character sums F(s) of a constraint");
    fourier->add_option("--constraint", fa.constraint)->required();
    fourier->add_option("--n", fa.n)->required()->check(CLI::Range(1, 256));
    fourier->add_option("--s", fa.words, "Word(s) s at which to evaluate F");
    fourier->add_flag("--all", fa.all, "List every nonzero coefficient (n <= 16)");
    add_common(fourier, common);

    std::string table_id;
    auto* table = app.add_subcommand("table", "Recompute a reference table and compare with its printed values");
    table->add_option("--id", table_id)->required()->check(CLI::IsMember(table_ids()));
    add_common(table, common);

    VerifyArgs va;
    std::string suites;
    auto* verify = app.add_subcommand("verify", "Run the property suites");
    verify->add_option("--max-n", va.max_n, "Upper cap on blocklengths")->check(CLI::Range(1, 64));
    verify->add_option("--suites", suites, "Comma-separated subset of suites");
    verify->add_option("--seed", va.seed);
    verify->add_flag("--inject-fault", va.inject, "Force the first check of each suite to fail (test hook)");
    add_common(verify, common);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    const auto t0 = std::chrono::steady_clock::now();
    Output out;
    int code = kOk;
    try {
        if (*count) {
            code = run_count(ca, out);
        } else if (*weight) {
            code = run_weight_dist(wa, out);
        } else if (*bound) {
            code = run_bound(ba, out);
        } else if (*fourier) {
            code = run_fourier(fa, out);
        } else if (*table) {
            code = run_table(table_id, out);
        } else if (*verify) {
            std::stringstream ss(suites);
            for (std::string s; std::getline(ss, s, ',');)
                if (!s.empty()) va.suites.push_back(s);
            code = run_verify_cmd(va, out);
        }
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const InvalidParameter& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const StructureError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const CapExceeded& e) {
        std::cerr << "resource cap: " << e.what() << "\n";
        return kCap;
    } catch (const SolverLimit& e) {
        std::cerr << "solver limit: " << e.what() << "\n";
        return kSolver;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kFail;
    }
    const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    emit(out, common, ms);
    return code;
}

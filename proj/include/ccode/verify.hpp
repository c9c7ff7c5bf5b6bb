#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace ccode {

// Suite names, in run order:
//   charsum      closed-form character sums against brute character sums
//   dual-sum     dual-side divisibility and counts against brute enumeration
//   fourier      Plancherel, Parseval and Krawtchouk identities
//   sym-lp       symmetrized against full LPs, plus LP sanity properties
//   plotkin      Reed-Muller coset routes against direct counts
//   macwilliams  weight distributions of duals through MacWilliams
const std::vector<std::string>& verify_suite_names();

struct VerifyOptions {
    int max_n = 32;             // upper cap on blocklengths, applied on top of each suite's own limit
    std::vector<std::string> suites;  // empty: all suites
    std::uint64_t seed = 20240601;
    bool inject_fault = false;  // corrupt the first expected value of each suite (test hook)
};

struct SuiteResult {
    std::string name;
    bool passed = true;
    long checks = 0;
    std::string counterexample;  // first failure, empty when passed
    double seconds = 0.0;
};

SuiteResult run_verify_suite(const std::string& name, const VerifyOptions& opt);
std::vector<SuiteResult> run_verify(const VerifyOptions& opt);

}  // namespace ccode

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "minksum/family.hpp"

namespace minksum::verify {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
    double seconds = 0.0;
};

struct Options {
    /// Runs the long P(4) degree-support check as part of the paper suite.
    bool include_p4 = false;
    /// Certifies every P(4) candidate pair by LP instead of the tight-set
    /// route with sampled LP cross-checks.
    bool p4_full_lp = false;
    int workers = 1;
    std::uint64_t budget = 100'000'000;
};

/// The named checks, in suite order.
std::vector<std::string> check_names();

CheckResult run_check(const std::string& name, const Options& opts = {});

/// "paper" runs the whole suite (P(4) only when opted in); a check name runs
/// that single check. Unknown names raise DomainError.
std::vector<CheckResult> run_suite(const std::string& suite, const Options& opts = {});

/// Deterministic corpus backing the sweep-style checks.
std::vector<SimplexFamily> corpus_named();
std::vector<SimplexFamily> corpus_random(int count, int max_sets, unsigned seed = 987654321u);
std::vector<SimplexFamily> corpus_all();

/// The published 41-column vertex/degree table of P(3) (paper3 labeling).
struct GoldenColumn {
    LatticePoint point;
    int degree;
};
const std::vector<GoldenColumn>& p3_golden_table();

/// Degrees present among P(4) vertices: {14..28} minus {16, 23, 26, 27}.
const std::vector<int>& p4_expected_degrees();

}  // namespace minksum::verify

#pragma once

#include <string>
#include <vector>

namespace adnil {

struct VerifyOptions {
    int max_rank = 5;      // combinatorial suites sweep ranks 1..max_rank
    int lie_max_rank = 4;  // matrix-unit oracle sweep
    int threads = 1;       // worker count for the exhaustive scans
};

struct SuiteResult {
    std::string suite;
    bool passed = true;
    long long cases = 0;
    std::string counterexample;  // first failing case in enumeration order
    std::string note;            // informational only
    double seconds = 0.0;
};

/// Runs every invariant suite exhaustively up to the configured ranks.
/// Deterministic regardless of thread count: the reported counterexample is
/// always the first one in enumeration order.
std::vector<SuiteResult> run_verification(const VerifyOptions& options);

bool all_passed(const std::vector<SuiteResult>& results);

/// One line per suite (PASS/FAIL, case count, time), counterexamples and
/// notes indented underneath.
std::string format_report(const std::vector<SuiteResult>& results);

}  // namespace adnil

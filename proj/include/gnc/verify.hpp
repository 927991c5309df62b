#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace gnc {

struct Counterexample {
    /// graph6 of the offending graph (empty when the case is not a graph).
    std::string graph;
    /// -1 when no single g applies.
    int g = -1;
    std::string detail;
};

inline constexpr std::size_t max_counterexamples = 20;

struct CheckResult {
    std::string name;
    std::uint64_t cases = 0;
    std::uint64_t failures = 0;
    /// Advisory checks log divergences without failing the suite.
    bool advisory = false;
    /// First max_counterexamples failures in case order.
    std::vector<Counterexample> counterexamples;
    bool passed() const { return advisory || failures == 0; }
};

struct SuiteReport {
    std::string suite;
    int max_n = 0;
    std::vector<CheckResult> checks;
    bool passed() const;
};

struct VerifyOptions {
    /// 0 selects the suite default.
    int max_n = 0;
    int threads = 1;
};

/// Suite names in run order; "all" is accepted by run_suites as well.
const std::vector<std::string>& suite_names();
int default_max_n(std::string_view suite);

/// Runs one suite. Throws ParameterError for unknown names. Results do not
/// depend on options.threads.
SuiteReport run_suite(std::string_view suite, const VerifyOptions& options);
/// Runs the named suite, or every suite for "all".
std::vector<SuiteReport> run_suites(std::string_view suite, const VerifyOptions& options);

} // namespace gnc

#pragma once

#include <string>
#include <vector>

namespace qosc::verify {

/// One named oracle check: the worst residual it observed and the tolerance
/// it is held to.
struct CheckResult {
    std::string name;
    double residual;
    double tolerance;
    bool pass;
};

/// Suite selectors accepted by run_suite, in execution order.
std::vector<std::string> suite_names();

/// Runs "all" or one of suite_names(). Deterministic ordering and content.
std::vector<CheckResult> run_suite(const std::string& selector);

/// Fixed-width one-line-per-check report with a PASS/FAIL verdict column.
std::string report(const std::vector<CheckResult>& results);

bool all_passed(const std::vector<CheckResult>& results);

// Independent small-n oracle for the Laguerre recurrence: the explicit sum
// L_n^{(a)}(x) = sum_k (-1)^k binom(n+a, n-k) x^k / k!.
double laguerre_explicit_sum(int n, double a, double x);

} // namespace qosc::verify

#pragma once

#include <string>
#include <vector>

namespace ecsim {

/// Outcome of one cross-validation suite.
struct SuiteResult {
    std::string name;
    double max_deviation = 0.0;
    double tolerance = 0.0;
    bool passed = false;
    std::string note;
};

struct ValidationReport {
    std::vector<SuiteResult> suites;

    bool all_passed() const;
};

/// Runs every cross-check: closed-form witnesses against the dense qubit
/// encoding, the monogamy decomposition of the three-qubit tangle, the
/// closed-form amplitudes against matrix-exponential propagation, the decay
/// coefficients against a discretized-bath integration, and the two N = 5
/// witness thresholds.  `closed_form_offset` shifts the closed-form witness
/// values before comparison; a nonzero offset is a self-test that the suite
/// actually detects discrepancies.
ValidationReport run_validation(double closed_form_offset = 0.0);

/// Human-readable report, one line per suite.
std::string format_report(const ValidationReport& report);

}  // namespace ecsim

#pragma once

#include <string>
#include <vector>

namespace ncclark {

// One measured comparison inside a criterion. `bound` is the pinned
// tolerance (or exact target); `pass` records the verdict actually measured.
struct CheckLine {
    std::string label;
    bool pass = false;
    double measured = 0.0;
    double bound = 0.0;
    std::string comparator; // "<=", ">=", "==", "verdict"
};

struct CriterionResult {
    int id = 0;
    std::string title;
    bool pass = false;
    std::vector<CheckLine> checks;
    std::vector<std::string> notes; // scope decisions, measured curves, exclusions
};

// The twelve acceptance criteria. Tolerances are pinned inside each runner;
// failures are reported with the measured values, never masked.
CriterionResult runCriterion(int id);
std::vector<CriterionResult> runAcceptanceSuite();

// "[PASS]/[FAIL] <id> <title>" plus per-check lines.
std::string formatCriterion(const CriterionResult& r);

} // namespace ncclark

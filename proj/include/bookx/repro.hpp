#ifndef BOOKX_REPRO_HPP
#define BOOKX_REPRO_HPP

#include <functional>
#include <string>
#include <vector>

namespace bookx {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool passed = false;
    std::string detail;
    double seconds = 0;
    double limit_seconds = 0;
};

constexpr int kCriterionCount = 10;

/// Runs acceptance criterion `id` (1..10). Correctness and the time limit
/// both have to hold for a pass.
CriterionResult run_criterion(int id);

/// One line per criterion, e.g. "PASS  3 emax-closed-form ...".
std::string format_result(const CriterionResult& r);

}  // namespace bookx

#endif  // BOOKX_REPRO_HPP

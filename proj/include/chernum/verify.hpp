#pragma once

#include <string>
#include <vector>

namespace chernum {

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

// Runs the identity suite up to the given weight bound (capped per check by
// the cost of its route). The fast suite trims the bounds roughly in half.
// Every check compares at least two independently computed routes or an
// independent combinatorial oracle.
std::vector<CheckResult> run_verification(int max_n, bool fast_suite);

bool all_passed(const std::vector<CheckResult>& results);

} // namespace chernum

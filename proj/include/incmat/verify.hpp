#pragma once

#include <string>
#include <vector>

namespace incmat {

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;  // empty when passed
};

// Runs the full battery of structural identities and solver cross-checks for
// every admissible parameter choice with universe size up to v_max.
// Deterministic (fixed RNG seed).
std::vector<CheckResult> run_verification(int v_max);

}  // namespace incmat

#pragma once

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "gallai/golden.hpp"

namespace gallai {

struct CheckResult {
    int criterion = 0;
    std::string name;    // short name of the checked result
    bool passed = false;
    std::string detail;
};

struct VerifyOptions {
    // Adds the n = 8 exhaustive count (minutes of CPU).
    bool deep = false;
    int threads = 1;
    std::span<const golden::CountsRow> counts = golden::counts_table();
    std::function<void(const CheckResult&)> on_result;
};

// Runs every computational check of the counting results and returns one
// entry per check, in order. Each entry is also streamed to on_result.
std::vector<CheckResult> run_verification(const VerifyOptions& options);

bool all_passed(const std::vector<CheckResult>& results);

}  // namespace gallai

#pragma once

// Published reference values, diffed against computed values by `verify`
// and `count`.

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>

namespace gallai::golden {

struct CountsRow {
    int n;
    std::uint64_t c1, c2, c3, c;
};

struct BoundsRow {
    int n;
    std::uint64_t c;
    std::uint64_t lower;
    std::uint64_t upper;
    std::string_view ratio_upper_over_c;
    std::string_view ratio_c_over_lower;
};

// Published exact counts of Gallai 3-colorings of K_n, n = 2..8.
std::span<const CountsRow> counts_table();

// Published bound comparison with ratios truncated to two decimals, n = 2..8.
std::span<const BoundsRow> bounds_table();

std::optional<CountsRow> counts_for(int n, std::span<const CountsRow> table = counts_table());

}  // namespace gallai::golden

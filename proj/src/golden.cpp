#include "gallai/golden.hpp"

#include <array>

namespace gallai::golden {

namespace {

// n, c1, c2, c3, c
constexpr std::array<CountsRow, 7> kCounts{{
    {2, 3, 0, 0, 3},
    {3, 3, 18, 0, 21},
    {4, 3, 186, 90, 279},
    {5, 3, 3066, 3060, 6129},
    {6, 3, 98298, 112686, 210987},
    {7, 3, 6291450, 5522496, 11813949},
    {8, 3, 805306362, 407207826, 1212514191},
}};

// n, c, 3*2^(n choose 2)-3, 7(n+1)2^(n choose 2), upper/c, c/lower
constexpr std::array<BoundsRow, 7> kBounds{{
    {2, 3, 3, 42, "14.00", "1.00"},
    {3, 21, 21, 224, "10.66", "1.00"},
    {4, 279, 189, 2240, "8.02", "1.47"},
    {5, 6129, 3069, 43008, "7.01", "1.99"},
    {6, 210987, 98301, 1605632, "7.61", "2.14"},
    {7, 11813949, 6291453, 117440512, "9.94", "1.87"},
    {8, 1212514191, 805306365, 16911433728ULL, "13.94", "1.50"},
}};

}  // namespace

std::span<const CountsRow> counts_table() { return kCounts; }
std::span<const BoundsRow> bounds_table() { return kBounds; }

std::optional<CountsRow> counts_for(int n, std::span<const CountsRow> table) {
    for (const auto& row : table)
        if (row.n == n) return row;
    return std::nullopt;
}

}  // namespace gallai::golden

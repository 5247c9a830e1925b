#pragma once

// Exact big-integer evaluation of the lower and upper bounds on the number of
// Gallai 3-colorings, the recurrences majorizing the 3-color count, and the
// comparison table against exact counts.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace gallai {

using BigCount = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

// 2^(n choose 2)
BigCount two_pow_pairs(int n);

// 3 * 2^(n choose 2) - 3: colorings using at most two colors. n >= 2.
BigCount lower_bound(int n);

// 7 (n + 1) 2^(n choose 2). n >= 2.
BigCount upper_bound(int n);

struct C3RecurrenceBound {
    // Iterating c3(m+1) <= (2^(m-1)+1)(3*2^(m choose 2) - 6) + (2^m + 3) c3(m).
    BigCount tight;
    // Iterating the looser c3(m+1) <= 3(2^(m-1)+1) 2^(m choose 2) + (2^m + 3) c3(m).
    BigCount loose;
};

// Both iterates started from c3(3) = 0. n >= 4.
C3RecurrenceBound c3_recurrence_bound(int n);

// f(1) = f(2) = f(3) = 0, f(m+1) = 3 * 2^m * 2^(m choose 2) + (2^m + 3) f(m). n >= 1.
BigCount f_recursion(int n);

// f(n) / 2^(n choose 2), exact.
BigRational k_value(int n);

// num/den truncated toward zero to two decimals, e.g. 224/21 -> "10.66".
std::string truncated_ratio(const BigCount& num, const BigCount& den);

// 3(2^(n-1)+1) 2^(n choose 2) + (2^n+3) 7n 2^(n choose 2) <= 7(n+1) 2^(n+1 choose 2)
bool induction_step_holds(int n);

struct BoundRow {
    int n = 0;
    std::optional<BigCount> exact_c;
    BigCount lower;
    BigCount upper;
    BigCount f;
    BigRational k;
    // Empty when exact_c is absent.
    std::string ratio_upper_over_c;
    std::string ratio_c_over_lower;
};

// Rows 2..max_n; `exact` maps n to c(n) where known.
std::vector<BoundRow> bound_table(int max_n, const std::map<int, std::uint64_t>& exact = {});

std::string to_string(const BigRational& q);

}  // namespace gallai

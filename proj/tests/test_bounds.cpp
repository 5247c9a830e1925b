#include <doctest.h>

#include "gallai/bounds.hpp"
#include "gallai/errors.hpp"

using namespace gallai;

namespace {

std::uint64_t pairs_pow(int n) { return std::uint64_t{1} << (n * (n - 1) / 2); }

}  // namespace

TEST_CASE("closed-form bounds in machine integers") {
    for (int n = 2; n <= 11; ++n) {
        CAPTURE(n);
        CHECK(two_pow_pairs(n) == pairs_pow(n));
        CHECK(lower_bound(n) == 3 * pairs_pow(n) - 3);
        CHECK(upper_bound(n) == 7 * std::uint64_t(n + 1) * pairs_pow(n));
    }
    CHECK(two_pow_pairs(40) == (BigCount(1) << 780));
    CHECK(msb(upper_bound(64)) >= 2016);
    CHECK_THROWS_AS(lower_bound(1), InvalidArgument);
    CHECK_THROWS_AS(upper_bound(1), InvalidArgument);
}

TEST_CASE("recurrences iterated independently") {
    std::uint64_t f = 0, tight = 0, loose = 0;
    for (int m = 3; m < 9; ++m) {
        const std::uint64_t p = std::uint64_t{1} << m;
        f = 3 * p * pairs_pow(m) + (p + 3) * f;
        tight = (p / 2 + 1) * (3 * pairs_pow(m) - 6) + (p + 3) * tight;
        loose = 3 * (p / 2 + 1) * pairs_pow(m) + (p + 3) * loose;
        CAPTURE(m + 1);
        CHECK(f_recursion(m + 1) == f);
        CHECK(c3_recurrence_bound(m + 1).tight == tight);
        CHECK(c3_recurrence_bound(m + 1).loose == loose);
        CHECK(k_value(m + 1) == BigRational(BigCount(f), BigCount(pairs_pow(m + 1))));
    }
    for (int n = 1; n <= 3; ++n) CHECK(f_recursion(n) == 0);
    CHECK(to_string(k_value(5)) == "105/16");
    CHECK(to_string(k_value(4)) == "3");
}

TEST_CASE("two-decimal truncation") {
    CHECK(truncated_ratio(224, 21) == "10.66");
    CHECK(truncated_ratio(42, 3) == "14.00");
    CHECK(truncated_ratio(6129, 3069) == "1.99");
    CHECK(truncated_ratio(1, 3) == "0.33");
    CHECK(truncated_ratio(2, 3) == "0.66");
    CHECK(truncated_ratio(201, 100) == "2.01");
    CHECK(truncated_ratio(1999, 1000) == "1.99");
    CHECK(truncated_ratio(5, 1000) == "0.00");
    CHECK_THROWS_AS(truncated_ratio(1, 0), InvalidArgument);
}

TEST_CASE("induction step inequality") {
    for (int n = 4; n <= 64; ++n) CHECK(induction_step_holds(n));
    // direct evaluation for small n
    for (int n = 4; n <= 8; ++n) {
        const std::uint64_t p = pairs_pow(n);
        const std::uint64_t lhs = 3 * ((std::uint64_t{1} << (n - 1)) + 1) * p +
                                  ((std::uint64_t{1} << n) + 3) * 7 * std::uint64_t(n) * p;
        CHECK(induction_step_holds(n) == (lhs <= 7 * std::uint64_t(n + 1) * pairs_pow(n + 1)));
    }
}

TEST_CASE("bound table") {
    const auto rows = bound_table(10, {{2, 3}, {3, 21}});
    REQUIRE(rows.size() == 9);
    CHECK(rows.front().n == 2);
    CHECK(rows.back().n == 10);
    CHECK(rows[0].exact_c == BigCount(3));
    CHECK(rows[0].ratio_upper_over_c == "14.00");
    CHECK(rows[0].ratio_c_over_lower == "1.00");
    CHECK(rows[1].ratio_upper_over_c == "10.66");
    CHECK(!rows[2].exact_c);
    CHECK(rows[2].ratio_upper_over_c.empty());
    CHECK(rows[8].upper == upper_bound(10));
    CHECK_THROWS_AS(bound_table(1), InvalidArgument);
}

#include "gallai/bounds.hpp"

#include "gallai/errors.hpp"

namespace gallai {

namespace {

BigCount pow2(long e) {
    BigCount one = 1;
    return one << e;
}

long pairs(int n) { return static_cast<long>(n) * (n - 1) / 2; }

void require_at_least(int n, int min, const char* what) {
    if (n < min) throw InvalidArgument(std::string(what) + " requires n >= " + std::to_string(min));
}

}  // namespace

BigCount two_pow_pairs(int n) {
    require_at_least(n, 1, "two_pow_pairs");
    return pow2(pairs(n));
}

BigCount lower_bound(int n) {
    require_at_least(n, 2, "lower_bound");
    return 3 * two_pow_pairs(n) - 3;
}

BigCount upper_bound(int n) {
    require_at_least(n, 2, "upper_bound");
    return 7 * BigCount(n + 1) * two_pow_pairs(n);
}

C3RecurrenceBound c3_recurrence_bound(int n) {
    require_at_least(n, 4, "c3_recurrence_bound");
    C3RecurrenceBound b{0, 0};
    for (int m = 3; m < n; ++m) {
        const BigCount growth = pow2(m) + 3;
        const BigCount two_color_weight = pow2(m - 1) + 1;
        b.tight = two_color_weight * (3 * two_pow_pairs(m) - 6) + growth * b.tight;
        b.loose = 3 * two_color_weight * two_pow_pairs(m) + growth * b.loose;
    }
    return b;
}

BigCount f_recursion(int n) {
    require_at_least(n, 1, "f_recursion");
    BigCount f = 0;
    for (int m = 3; m < n; ++m) f = 3 * pow2(m) * two_pow_pairs(m) + (pow2(m) + 3) * f;
    return f;
}

BigRational k_value(int n) { return BigRational(f_recursion(n), two_pow_pairs(n)); }

std::string truncated_ratio(const BigCount& num, const BigCount& den) {
    if (den <= 0 || num < 0) throw InvalidArgument("ratio needs a nonnegative numerator and positive denominator");
    const BigCount hundredths = (num * 100) / den;
    const BigCount whole = hundredths / 100;
    const int frac = static_cast<int>(hundredths % 100);
    return whole.str() + "." + (frac < 10 ? "0" : "") + std::to_string(frac);
}

bool induction_step_holds(int n) {
    require_at_least(n, 4, "induction_step_holds");
    const BigCount base = two_pow_pairs(n);
    const BigCount lhs = 3 * (pow2(n - 1) + 1) * base + (pow2(n) + 3) * 7 * BigCount(n) * base;
    const BigCount rhs = 7 * BigCount(n + 1) * two_pow_pairs(n + 1);
    return lhs <= rhs;
}

std::vector<BoundRow> bound_table(int max_n, const std::map<int, std::uint64_t>& exact) {
    require_at_least(max_n, 2, "bound_table");
    std::vector<BoundRow> rows;
    for (int n = 2; n <= max_n; ++n) {
        BoundRow row;
        row.n = n;
        row.lower = lower_bound(n);
        row.upper = upper_bound(n);
        row.f = f_recursion(n);
        row.k = BigRational(row.f, two_pow_pairs(n));
        if (auto it = exact.find(n); it != exact.end()) {
            row.exact_c = BigCount(it->second);
            row.ratio_upper_over_c = truncated_ratio(row.upper, *row.exact_c);
            row.ratio_c_over_lower = truncated_ratio(*row.exact_c, row.lower);
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

std::string to_string(const BigRational& q) {
    const BigCount num = boost::multiprecision::numerator(q);
    const BigCount den = boost::multiprecision::denominator(q);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

}  // namespace gallai

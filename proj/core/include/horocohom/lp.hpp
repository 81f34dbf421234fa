#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <vector>

namespace horo {

// Exact reasoning about systems of linear inequalities with integer data,
// by Fourier-Motzkin elimination. Strict and non-strict constraints mix
// freely. Internally a checked 128-bit integer path handles the common
// case and falls back to big rationals on overflow, so results are always
// exact.

// The constraint  sum_i coeffs[i] * x_i  <=  bound   (or  <  bound).
struct LinearConstraint {
    std::vector<std::int64_t> coeffs;
    std::int64_t bound = 0;
    bool strict = false;
};

inline LinearConstraint less_equal(std::vector<std::int64_t> c, std::int64_t b) {
    return {std::move(c), b, false};
}
inline LinearConstraint less_than(std::vector<std::int64_t> c, std::int64_t b) {
    return {std::move(c), b, true};
}

// Whether the system has a real solution.
bool lp_feasible(const std::vector<LinearConstraint>& cs, int nvars);

// Range of one coordinate over the closure of the solution set. Strict
// constraints are relaxed to their closures first, so for a nonempty open
// cell the bounds below are attained by the closure and bracket the cell.
struct VariableRange {
    bool feasible = true;
    std::optional<mpq_class> lower;  // absent: unbounded below
    std::optional<mpq_class> upper;  // absent: unbounded above
};

VariableRange lp_variable_range(const std::vector<LinearConstraint>& cs,
                                int nvars, int var);

} // namespace horo

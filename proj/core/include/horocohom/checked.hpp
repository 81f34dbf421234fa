#pragma once

#include "horocohom/errors.hpp"

#include <cstdint>
#include <vector>

namespace horo {

// Overflow-checked 64-bit arithmetic. All lattice computations go through
// these helpers so that a malicious or merely large input fails loudly
// instead of wrapping silently.

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r))
        throw OverflowError("integer overflow in addition");
    return r;
}

inline std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_sub_overflow(a, b, &r))
        throw OverflowError("integer overflow in subtraction");
    return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r))
        throw OverflowError("integer overflow in multiplication");
    return r;
}

inline std::int64_t checked_neg(std::int64_t a) {
    return checked_sub(0, a);
}

// Checked dot product of two integer vectors of equal length.
inline std::int64_t checked_dot(const std::vector<std::int64_t>& a,
                                const std::vector<std::int64_t>& b) {
    if (a.size() != b.size())
        throw Error("dot product of vectors with different lengths");
    std::int64_t s = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        s = checked_add(s, checked_mul(a[i], b[i]));
    return s;
}

} // namespace horo

#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <vector>

namespace horo {

using QMatrix = std::vector<std::vector<mpq_class>>;
using ZMatrix = std::vector<std::vector<std::int64_t>>;

// Rank of a rational matrix, computed exactly by Gaussian elimination.
int matrix_rank(QMatrix m);

// Determinant of a square integer matrix, exact (fraction-free elimination).
mpz_class int_determinant(const ZMatrix& m);

// Inverse of an integer matrix with determinant +-1. The inverse is again
// integral; throws ValidationError if |det| != 1.
ZMatrix unimodular_inverse(const ZMatrix& m);

// Solves A x = b for square nonsingular A over the rationals.
std::vector<mpq_class> solve_linear(QMatrix a, std::vector<mpq_class> b);

} // namespace horo

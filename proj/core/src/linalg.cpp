#include "horocohom/linalg.hpp"

#include "horocohom/errors.hpp"

#include <cstddef>
#include <utility>

namespace horo {

int matrix_rank(QMatrix m) {
    if (m.empty()) return 0;
    const std::size_t rows = m.size(), cols = m[0].size();
    int rank = 0;
    std::size_t pivot_row = 0;
    for (std::size_t col = 0; col < cols && pivot_row < rows; ++col) {
        std::size_t sel = pivot_row;
        while (sel < rows && m[sel][col] == 0) ++sel;
        if (sel == rows) continue;
        std::swap(m[sel], m[pivot_row]);
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == pivot_row || m[r][col] == 0) continue;
            mpq_class f = m[r][col] / m[pivot_row][col];
            for (std::size_t c = col; c < cols; ++c)
                m[r][c] -= f * m[pivot_row][c];
        }
        ++pivot_row;
        ++rank;
    }
    return rank;
}

mpz_class int_determinant(const ZMatrix& m) {
    const std::size_t n = m.size();
    if (n == 0) return 1;
    for (const auto& row : m)
        if (row.size() != n) throw Error("determinant of a non-square matrix");

    // Bareiss fraction-free elimination; every division below is exact.
    std::vector<std::vector<mpz_class>> a(n, std::vector<mpz_class>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            a[i][j] = static_cast<long>(m[i][j]);

    mpz_class prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            std::size_t sel = k + 1;
            while (sel < n && a[sel][k] == 0) ++sel;
            if (sel == n) return 0;
            std::swap(a[sel], a[k]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                mpz_class num = a[i][j] * a[k][k] - a[i][k] * a[k][j];
                mpz_divexact(a[i][j].get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
            }
            a[i][k] = 0;
        }
        prev = a[k][k];
    }
    return sign * a[n - 1][n - 1];
}

ZMatrix unimodular_inverse(const ZMatrix& m) {
    const std::size_t n = m.size();
    mpz_class det = int_determinant(m);
    if (det != 1 && det != -1)
        throw ValidationError("matrix is not unimodular (|det| != 1)");

    // Gauss-Jordan over Q; integrality of the result follows from |det| = 1.
    QMatrix a(n, std::vector<mpq_class>(2 * n, 0));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j)
            a[i][j] = static_cast<long>(m[i][j]);
        a[i][n + i] = 1;
    }
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t sel = col;
        while (a[sel][col] == 0) ++sel;
        std::swap(a[sel], a[col]);
        mpq_class p = a[col][col];
        for (std::size_t c = 0; c < 2 * n; ++c) a[col][c] /= p;
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || a[r][col] == 0) continue;
            mpq_class f = a[r][col];
            for (std::size_t c = 0; c < 2 * n; ++c)
                a[r][c] -= f * a[col][c];
        }
    }
    ZMatrix inv(n, std::vector<std::int64_t>(n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            mpq_class& e = a[i][n + j];
            if (e.get_den() != 1)
                throw Error("unimodular inverse produced a non-integer entry");
            if (!e.get_num().fits_slong_p())
                throw OverflowError("unimodular inverse entry exceeds 64 bits");
            inv[i][j] = e.get_num().get_si();
        }
    }
    return inv;
}

std::vector<mpq_class> solve_linear(QMatrix a, std::vector<mpq_class> b) {
    const std::size_t n = a.size();
    if (b.size() != n) throw Error("solve_linear: size mismatch");
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t sel = col;
        while (sel < n && a[sel][col] == 0) ++sel;
        if (sel == n) throw Error("solve_linear: singular matrix");
        std::swap(a[sel], a[col]);
        std::swap(b[sel], b[col]);
        mpq_class p = a[col][col];
        for (std::size_t c = col; c < n; ++c) a[col][c] /= p;
        b[col] /= p;
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || a[r][col] == 0) continue;
            mpq_class f = a[r][col];
            for (std::size_t c = col; c < n; ++c)
                a[r][c] -= f * a[col][c];
            b[r] -= f * b[col];
        }
    }
    return b;
}

} // namespace horo

#pragma once

// Dense exact linear algebra over an arbitrary field-like coefficient type C
// (Rational, RatFunc, or truncated series). Everything is Gaussian
// elimination with explicit pivoting hooks:
//
//   * for honest fields a pivot is any nonzero entry;
//   * for truncated series the pivot should be the entry of lowest valuation,
//     since "zero" only means "zero as far as we can see" and dividing by a
//     high-valuation entry burns precision.
//
// Matrices are plain vector<vector<C>>; sizes here are single digits to low
// tens, so simplicity beats cleverness.

#include "rational.hpp"

#include <functional>
#include <vector>

namespace dt {

template <class C>
using Matrix = std::vector<std::vector<C>>;

template <class C>
Matrix<C> mat_identity(size_t n, const C& one, const C& zero) {
    Matrix<C> I(n, std::vector<C>(n, zero));
    for (size_t i = 0; i < n; ++i) I[i][i] = one;
    return I;
}

template <class C>
std::vector<C> mat_vec(const Matrix<C>& A, const std::vector<C>& x) {
    if (A.empty()) return {};
    std::vector<C> y(A.size(), A[0][0] - A[0][0]); // zero of the ring
    for (size_t i = 0; i < A.size(); ++i)
        for (size_t j = 0; j < x.size(); ++j) y[i] = y[i] + A[i][j] * x[j];
    return y;
}

template <class C>
Matrix<C> mat_mul(const Matrix<C>& A, const Matrix<C>& B) {
    size_t n = A.size(), m = B.empty() ? 0 : B[0].size(), k = B.size();
    Matrix<C> R(n, std::vector<C>(m, A[0][0] - A[0][0]));
    for (size_t i = 0; i < n; ++i)
        for (size_t l = 0; l < k; ++l)
            for (size_t j = 0; j < m; ++j) R[i][j] = R[i][j] + A[i][l] * B[l][j];
    return R;
}

namespace detail {

template <class C>
bool lin_is_zero(const C& c) {
    if constexpr (std::is_same_v<C, Rational>)
        return c == 0;
    else
        return c.is_zero();
}

// pivot preference: lower rank wins; -1 means unusable (zero)
template <class C>
long default_pivot_rank(const C& c) {
    return lin_is_zero(c) ? -1 : 0;
}

} // namespace detail

// Solves A x = b for rectangular A (rows >= cols required, full column rank),
// eliminating with the supplied pivot ranking. Surplus equations must be
// satisfied by the solution; inconsistency or rank deficiency throws.
template <class C>
std::vector<C> solve_linear(Matrix<C> A, std::vector<C> b,
                            std::function<long(const C&)> pivot_rank = nullptr) {
    const size_t rows = A.size();
    const size_t cols = rows ? A[0].size() : 0;
    if (b.size() != rows) throw error("solve_linear: shape mismatch");
    if (rows < cols) throw error("solve_linear: underdetermined system");
    if (!pivot_rank) pivot_rank = [](const C& c) { return detail::default_pivot_rank(c); };

    std::vector<size_t> pivot_row_of(cols);
    size_t next = 0; // rows above `next` are finished pivot rows
    for (size_t col = 0; col < cols; ++col) {
        long best = -1;
        size_t best_row = rows;
        for (size_t r = next; r < rows; ++r) {
            long rk = pivot_rank(A[r][col]);
            if (rk >= 0 && (best < 0 || rk < best)) {
                best = rk;
                best_row = r;
            }
        }
        if (best_row == rows) throw error("solve_linear: singular system");
        std::swap(A[next], A[best_row]);
        std::swap(b[next], b[best_row]);
        const C piv = A[next][col];
        for (size_t r = next + 1; r < rows; ++r) {
            if (detail::lin_is_zero(A[r][col])) continue;
            C f = A[r][col] / piv;
            for (size_t c = col; c < cols; ++c) A[r][c] = A[r][c] - f * A[next][c];
            b[r] = b[r] - f * b[next];
        }
        pivot_row_of[col] = next;
        ++next;
    }
    // surplus rows must have reduced to 0 = 0
    for (size_t r = next; r < rows; ++r)
        if (!detail::lin_is_zero(b[r]))
            throw error("solve_linear: inconsistent system");

    std::vector<C> x(cols, b.size() ? b[0] - b[0] : C());
    for (size_t col = cols; col-- > 0;) {
        size_t r = pivot_row_of[col];
        C acc = b[r];
        for (size_t c = col + 1; c < cols; ++c) acc = acc - A[r][c] * x[c];
        x[col] = acc / A[r][col];
    }
    return x;
}

// Inverse of a square matrix over a field.
template <class C>
Matrix<C> mat_inverse(const Matrix<C>& A, const C& one) {
    const size_t n = A.size();
    const C zero = one - one;
    Matrix<C> inv(n, std::vector<C>(n, zero));
    for (size_t j = 0; j < n; ++j) {
        std::vector<C> e(n, zero);
        e[j] = one;
        auto col = solve_linear<C>(A, e);
        for (size_t i = 0; i < n; ++i) inv[i][j] = col[i];
    }
    return inv;
}

} // namespace dt

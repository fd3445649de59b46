#pragma once

// Exact Gaussian elimination over a field (Rational or Cyclotomic).
// Pivoting is deterministic: first nonzero entry of the column, top-down.

#include <optional>
#include <utility>
#include <vector>

#include "zonotopal/rational.hpp"

namespace zonotopal {

template <class F>
using Matrix = std::vector<std::vector<F>>;

template <class F>
struct Echelon {
    Matrix<F> rows;           // reduced row echelon form, zero rows dropped
    std::vector<int> pivots;  // pivot column of each row
};

template <class F>
Echelon<F> rref(Matrix<F> m, int ncols) {
    Echelon<F> out;
    int r = 0;
    const int nrows = static_cast<int>(m.size());
    for (int c = 0; c < ncols && r < nrows; ++c) {
        int p = -1;
        for (int i = r; i < nrows; ++i)
            if (!is_zero(m[i][c])) { p = i; break; }
        if (p < 0) continue;
        std::swap(m[p], m[r]);
        F inv = F(1) / m[r][c];
        for (int j = c; j < ncols; ++j)
            if (!is_zero(m[r][j])) m[r][j] *= inv;
        for (int i = 0; i < nrows; ++i) {
            if (i == r || is_zero(m[i][c])) continue;
            F f = m[i][c];
            for (int j = c; j < ncols; ++j)
                if (!is_zero(m[r][j])) m[i][j] -= f * m[r][j];
        }
        out.pivots.push_back(c);
        ++r;
    }
    m.resize(r);
    out.rows = std::move(m);
    return out;
}

template <class F>
int matrix_rank(const Matrix<F>& m, int ncols) {
    return static_cast<int>(rref(m, ncols).pivots.size());
}

// Basis of {x : m x = 0}; one vector per free column, free entry set to 1.
template <class F>
Matrix<F> kernel_basis(const Matrix<F>& m, int ncols) {
    Echelon<F> e = rref(m, ncols);
    std::vector<bool> is_pivot(ncols, false);
    for (int p : e.pivots) is_pivot[p] = true;
    Matrix<F> out;
    for (int f = 0; f < ncols; ++f) {
        if (is_pivot[f]) continue;
        std::vector<F> v(ncols, F(0));
        v[f] = F(1);
        for (size_t i = 0; i < e.pivots.size(); ++i) v[e.pivots[i]] = -e.rows[i][f];
        out.push_back(std::move(v));
    }
    return out;
}

// Some solution of A x = b, or nullopt when inconsistent.
template <class F>
std::optional<std::vector<F>> solve_linear(const Matrix<F>& A, const std::vector<F>& b, int ncols) {
    Matrix<F> aug = A;
    for (size_t i = 0; i < aug.size(); ++i) {
        aug[i].resize(ncols);
        aug[i].push_back(b[i]);
    }
    Echelon<F> e = rref(std::move(aug), ncols + 1);
    std::vector<F> x(ncols, F(0));
    for (size_t i = 0; i < e.pivots.size(); ++i) {
        if (e.pivots[i] == ncols) return std::nullopt;
        x[e.pivots[i]] = e.rows[i][ncols];
    }
    return x;
}

template <class F>
std::optional<Matrix<F>> inverse_matrix(const Matrix<F>& A) {
    const int n = static_cast<int>(A.size());
    Matrix<F> aug(n, std::vector<F>(2 * n, F(0)));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) aug[i][j] = A[i][j];
        aug[i][n + i] = F(1);
    }
    Echelon<F> e = rref(std::move(aug), 2 * n);
    if (static_cast<int>(e.pivots.size()) < n || e.pivots[n - 1] >= n) return std::nullopt;
    Matrix<F> inv(n, std::vector<F>(n, F(0)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) inv[i][j] = e.rows[i][n + j];
    return inv;
}

template <class F>
F determinant(Matrix<F> m) {
    const int n = static_cast<int>(m.size());
    F det(1);
    for (int c = 0; c < n; ++c) {
        int p = -1;
        for (int i = c; i < n; ++i)
            if (!is_zero(m[i][c])) { p = i; break; }
        if (p < 0) return F(0);
        if (p != c) {
            std::swap(m[p], m[c]);
            det = -det;
        }
        det *= m[c][c];
        F inv = F(1) / m[c][c];
        for (int i = c + 1; i < n; ++i) {
            if (is_zero(m[i][c])) continue;
            F f = m[i][c] * inv;
            for (int j = c; j < n; ++j) m[i][j] -= f * m[c][j];
        }
    }
    return det;
}

}  // namespace zonotopal

#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

#include "germ/rational.hpp"

namespace germ {

using Vec = std::vector<Rational>;
using Mat = std::vector<Vec>;  // row major; all rows the same length

inline std::size_t mat_cols(const Mat& m) { return m.empty() ? 0 : m[0].size(); }

inline Mat mat_transpose(const Mat& m) {
    const std::size_t r = m.size(), c = mat_cols(m);
    Mat t(c, Vec(r, Rational(0)));
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) t[j][i] = m[i][j];
    return t;
}

inline Vec mat_apply(const Mat& m, const Vec& v) {
    if (mat_cols(m) != v.size()) throw std::invalid_argument("mat_apply: shape mismatch");
    Vec out(m.size(), Rational(0));
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < v.size(); ++j)
            if (m[i][j] != 0 && v[j] != 0) out[i] += m[i][j] * v[j];
    return out;
}

inline Mat mat_mul(const Mat& a, const Mat& b) {
    if (mat_cols(a) != b.size()) throw std::invalid_argument("mat_mul: shape mismatch");
    Mat out(a.size(), Vec(mat_cols(b), Rational(0)));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t k = 0; k < b.size(); ++k) {
            if (a[i][k] == 0) continue;
            for (std::size_t j = 0; j < mat_cols(b); ++j)
                if (b[k][j] != 0) out[i][j] += a[i][k] * b[k][j];
        }
    return out;
}

inline bool mat_is_zero(const Mat& m) {
    for (const auto& row : m)
        for (const auto& x : row)
            if (x != 0) return false;
    return true;
}

/// Row-reduce in place to reduced row echelon form; returns pivot columns.
inline std::vector<std::size_t> rref_in_place(Mat& m) {
    std::vector<std::size_t> pivots;
    const std::size_t rows = m.size(), cols = mat_cols(m);
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t sel = rows;
        for (std::size_t i = r; i < rows; ++i)
            if (m[i][c] != 0) {
                sel = i;
                break;
            }
        if (sel == rows) continue;
        std::swap(m[r], m[sel]);
        const Rational inv = Rational(1) / m[r][c];
        for (auto& x : m[r]) x *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c] == 0) continue;
            const Rational f = m[i][c];
            for (std::size_t j = 0; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

inline std::size_t mat_rank(Mat m) { return rref_in_place(m).size(); }

/// Basis of the right kernel {v : M v = 0}; one vector per free column,
/// with the free coordinate set to 1 (canonical, deterministic).
inline std::vector<Vec> kernel_basis(Mat m) {
    const std::size_t cols = mat_cols(m);
    const auto pivots = rref_in_place(m);
    std::vector<bool> is_pivot(cols, false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<Vec> basis;
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        Vec v(cols, Rational(0));
        v[free] = 1;
        for (std::size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = -m[k][free];
        basis.push_back(std::move(v));
    }
    return basis;
}

/// One solution of A x = b (free coordinates zero), or nullopt.
inline std::optional<Vec> solve_linear(const Mat& a, const Vec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("solve_linear: shape mismatch");
    const std::size_t cols = mat_cols(a);
    Mat aug(a.size(), Vec(cols + 1, Rational(0)));
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < cols; ++j) aug[i][j] = a[i][j];
        aug[i][cols] = b[i];
    }
    const auto pivots = rref_in_place(aug);
    if (!pivots.empty() && pivots.back() == cols) return std::nullopt;  // inconsistent
    Vec x(cols, Rational(0));
    for (std::size_t k = 0; k < pivots.size(); ++k) x[pivots[k]] = aug[k][cols];
    return x;
}

/// Canonical representative of v modulo the column space of A: the pivot
/// coordinates of an echelon basis of col(A) are eliminated from v.
inline Vec reduce_mod_column_space(const Mat& a, Vec v) {
    Mat rows = mat_transpose(a);  // rows span col(A)
    const auto pivots = rref_in_place(rows);
    for (std::size_t k = 0; k < pivots.size(); ++k) {
        const Rational f = v[pivots[k]];
        if (f == 0) continue;
        for (std::size_t j = 0; j < v.size(); ++j) v[j] -= f * rows[k][j];
    }
    return v;
}

inline bool vec_is_zero(const Vec& v) {
    for (const auto& x : v)
        if (x != 0) return false;
    return true;
}

/// Dimension of the span of a list of vectors.
inline std::size_t span_dimension(const std::vector<Vec>& vs) {
    if (vs.empty()) return 0;
    return mat_rank(Mat(vs.begin(), vs.end()));
}

}  // namespace germ

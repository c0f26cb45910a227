#pragma once

#include <optional>
#include <vector>

#include "hwcone/rational.hpp"

namespace hwcone::linalg {

using Matrix = std::vector<std::vector<Rational>>;

/// Rank over Q by Gaussian elimination with exact arithmetic.
inline int rank(Matrix m) {
    if (m.empty()) return 0;
    const size_t rows = m.size(), cols = m[0].size();
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t pivot = r;
        while (pivot < rows && m[pivot][c] == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(m[r], m[pivot]);
        for (size_t i = r + 1; i < rows; ++i) {
            if (m[i][c] == 0) continue;
            Rational factor = m[i][c] / m[r][c];
            for (size_t j = c; j < cols; ++j) m[i][j] -= factor * m[r][j];
        }
        ++r;
    }
    return static_cast<int>(r);
}

/// Solves A x = b exactly. Requires a unique solution consistent with every
/// row (A may have more rows than columns); returns nullopt otherwise.
inline std::optional<std::vector<Rational>> solve(Matrix a, std::vector<Rational> b) {
    const size_t rows = a.size();
    if (rows == 0 || rows != b.size()) return std::nullopt;
    const size_t cols = a[0].size();
    for (auto& row : a)
        if (row.size() != cols) return std::nullopt;

    std::vector<size_t> pivot_col;
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t pivot = r;
        while (pivot < rows && a[pivot][c] == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(a[r], a[pivot]);
        std::swap(b[r], b[pivot]);
        for (size_t i = 0; i < rows; ++i) {
            if (i == r || a[i][c] == 0) continue;
            Rational factor = a[i][c] / a[r][c];
            for (size_t j = c; j < cols; ++j) a[i][j] -= factor * a[r][j];
            b[i] -= factor * b[r];
        }
        pivot_col.push_back(c);
        ++r;
    }
    if (pivot_col.size() != cols) return std::nullopt;  // underdetermined
    for (size_t i = r; i < rows; ++i)
        if (b[i] != 0) return std::nullopt;  // inconsistent
    std::vector<Rational> x(cols);
    for (size_t i = 0; i < cols; ++i) x[pivot_col[i]] = b[i] / a[i][pivot_col[i]];
    return x;
}

}  // namespace hwcone::linalg

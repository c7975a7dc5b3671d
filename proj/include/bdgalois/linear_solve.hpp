#pragma once

#include <optional>
#include <vector>

namespace bdgalois {

// Solves A x = b over an exact field by Gaussian elimination. Returns nullopt
// when inconsistent; free variables (if any) are set to zero, so the returned
// solution is deterministic.
template <class F>
std::optional<std::vector<F>> solve_linear_system(std::vector<std::vector<F>> a,
                                                  std::vector<F> b) {
    const std::size_t rows = a.size();
    const std::size_t cols = rows ? a[0].size() : 0;
    std::vector<std::size_t> pivot_col_of_row;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < rows; ++col) {
        std::size_t pr = row;
        while (pr < rows && a[pr][col].is_zero()) ++pr;
        if (pr == rows) continue;
        std::swap(a[pr], a[row]);
        std::swap(b[pr], b[row]);
        F inv = F(1) / a[row][col];
        for (std::size_t j = col; j < cols; ++j) a[row][j] = a[row][j] * inv;
        b[row] = b[row] * inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == row || a[i][col].is_zero()) continue;
            F f = a[i][col];
            for (std::size_t j = col; j < cols; ++j) a[i][j] -= f * a[row][j];
            b[i] -= f * b[row];
        }
        pivot_col_of_row.push_back(col);
        ++row;
    }
    for (std::size_t i = row; i < rows; ++i)
        if (!b[i].is_zero()) return std::nullopt;
    std::vector<F> x(cols);
    for (std::size_t i = 0; i < pivot_col_of_row.size(); ++i) x[pivot_col_of_row[i]] = b[i];
    return x;
}

}  // namespace bdgalois

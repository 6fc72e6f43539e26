#pragma once

#include <optional>
#include <vector>

namespace equichar::detail {

/// Row-echelon solve of A x = b over an exact field. Returns one solution
/// (free variables set to zero) or nullopt when the system is inconsistent.
/// Division and zero-testing are supplied by the caller so the same routine
/// serves both rational and cyclotomic coefficients.
template <class F, class IsZero, class Div>
std::optional<std::vector<F>> solve_linear(std::vector<std::vector<F>> a,
                                           std::vector<F> b, IsZero is_zero,
                                           Div div) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows == 0 ? 0 : a[0].size();
  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t pr = r;
    while (pr < rows && is_zero(a[pr][c])) ++pr;
    if (pr == rows) continue;
    std::swap(a[pr], a[r]);
    std::swap(b[pr], b[r]);
    const F pivot = a[r][c];
    for (std::size_t j = c; j < cols; ++j) a[r][j] = div(a[r][j], pivot);
    b[r] = div(b[r], pivot);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || is_zero(a[i][c])) continue;
      const F factor = a[i][c];
      for (std::size_t j = c; j < cols; ++j) a[i][j] = a[i][j] - factor * a[r][j];
      b[i] = b[i] - factor * b[r];
    }
    pivot_col.push_back(c);
    ++r;
  }
  for (std::size_t i = r; i < rows; ++i)
    if (!is_zero(b[i])) return std::nullopt;
  std::vector<F> x(cols, F{});
  for (std::size_t i = 0; i < pivot_col.size(); ++i) x[pivot_col[i]] = b[i];
  return x;
}

}  // namespace equichar::detail

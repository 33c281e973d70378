#include "fpa/detail/linear_system.hpp"

#include <utility>

namespace fpa::detail {

namespace {

// Reduced row echelon form in place; returns pivot columns in row order.
std::vector<std::size_t> rref(Matrix& a, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < a.size(); ++col) {
    std::size_t p = row;
    while (p < a.size() && sgn(a[p][col]) == 0) ++p;
    if (p == a.size()) continue;
    std::swap(a[p], a[row]);
    const Rational inv = 1 / a[row][col];
    for (std::size_t j = col; j < a[row].size(); ++j) a[row][j] *= inv;
    for (std::size_t r = 0; r < a.size(); ++r) {
      if (r == row || sgn(a[r][col]) == 0) continue;
      const Rational f = a[r][col];
      for (std::size_t j = col; j < a[r].size(); ++j) {
        if (sgn(a[row][j]) != 0) a[r][j] -= f * a[row][j];
      }
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

std::vector<std::vector<Rational>> nullspace(Matrix a, std::size_t cols) {
  const std::vector<std::size_t> pivots = rref(a, cols);
  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<std::vector<Rational>> out;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Rational> v(cols, Rational(0));
    v[f] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -a[r][f];
    out.push_back(std::move(v));
  }
  return out;
}

std::optional<std::vector<Rational>> solve(Matrix a, std::vector<Rational> b, std::size_t cols) {
  for (std::size_t r = 0; r < a.size(); ++r) {
    a[r].resize(cols, Rational(0));
    a[r].push_back(b[r]);
  }
  const std::vector<std::size_t> pivots = rref(a, cols);
  for (std::size_t r = pivots.size(); r < a.size(); ++r) {
    if (sgn(a[r][cols]) != 0) return std::nullopt;
  }
  std::vector<Rational> v(cols, Rational(0));
  for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = a[r][cols];
  return v;
}

}  // namespace fpa::detail

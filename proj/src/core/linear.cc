#include "gt/linear.h"

#include <utility>

#include "gt/error.h"

namespace gt {

LinearSolution solve_exact(std::vector<std::vector<Rational>> a, std::vector<Rational> b) {
  const std::size_t rows = a.size();
  GT_REQUIRE(b.size() == rows, ErrorKind::kInvalidArgument, "right-hand side length mismatch");
  const std::size_t cols = rows == 0 ? 0 : a[0].size();
  std::vector<std::size_t> pivot_cols;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t pivot = r;
    while (pivot < rows && a[pivot][c] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(a[pivot], a[r]);
    std::swap(b[pivot], b[r]);
    const Rational inv = 1 / a[r][c];
    for (std::size_t k = c; k < cols; ++k) a[r][k] *= inv;
    b[r] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0) continue;
      const Rational factor = a[i][c];
      for (std::size_t k = c; k < cols; ++k) a[i][k] -= factor * a[r][k];
      b[i] -= factor * b[r];
    }
    pivot_cols.push_back(c);
    ++r;
  }
  for (std::size_t i = r; i < rows; ++i) {
    if (b[i] != 0) return {LinearSolution::Kind::kNone, {}};
  }
  std::vector<Rational> x(cols, Rational(0));
  for (std::size_t i = 0; i < pivot_cols.size(); ++i) x[pivot_cols[i]] = b[i];
  const auto kind = pivot_cols.size() == cols ? LinearSolution::Kind::kUnique
                                              : LinearSolution::Kind::kContinuum;
  return {kind, std::move(x)};
}

}  // namespace gt

#include "qh/linsolve.hpp"

namespace qh {

std::optional<std::vector<Rational>> solve_linear(
    std::vector<std::vector<Rational>> A, std::vector<Rational> b) {
  const std::size_t rows = A.size();
  const std::size_t cols = rows ? A[0].size() : 0;
  for (const auto& r : A)
    if (r.size() != cols) throw InvalidArgument("ragged linear system");
  if (b.size() != rows) throw InvalidArgument("rhs size mismatch");

  std::vector<std::size_t> pivot_row_of_col(cols, SIZE_MAX);
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t p = SIZE_MAX;
    for (std::size_t r = rank; r < rows; ++r)
      if (!A[r][c].is_zero()) {
        p = r;
        break;
      }
    if (p == SIZE_MAX) continue;
    std::swap(A[p], A[rank]);
    std::swap(b[p], b[rank]);
    Rational inv = A[rank][c].inverse();
    for (std::size_t k = c; k < cols; ++k) A[rank][k] *= inv;
    b[rank] *= inv;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == rank || A[r][c].is_zero()) continue;
      Rational f = A[r][c];
      for (std::size_t k = c; k < cols; ++k) A[r][k] -= f * A[rank][k];
      b[r] -= f * b[rank];
    }
    pivot_row_of_col[c] = rank;
    ++rank;
  }
  for (std::size_t r = rank; r < rows; ++r)
    if (!b[r].is_zero()) return std::nullopt;

  std::vector<Rational> x(cols, Rational(0));
  for (std::size_t c = 0; c < cols; ++c)
    if (pivot_row_of_col[c] != SIZE_MAX) x[c] = b[pivot_row_of_col[c]];
  return x;
}

}  // namespace qh

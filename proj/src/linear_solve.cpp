#include "liftforge/linear_solve.hpp"

#include <utility>

#include "liftforge/error.hpp"

namespace liftforge {

SolveResult solve_exact(std::vector<std::vector<Rational>> a, std::vector<Rational> b) {
  const std::size_t rows = a.size();
  if (b.size() != rows) throw LiftingError(ErrorCode::DomainError, "solve_exact: row count mismatch");
  const std::size_t cols = rows == 0 ? 0 : a.front().size();
  for (const auto& r : a) {
    if (r.size() != cols) throw LiftingError(ErrorCode::DomainError, "solve_exact: ragged matrix");
  }

  std::size_t pivot_row = 0;
  std::vector<std::size_t> pivot_col_of_row;
  for (std::size_t col = 0; col < cols && pivot_row < rows; ++col) {
    std::size_t sel = pivot_row;
    while (sel < rows && a[sel][col].is_zero()) ++sel;
    if (sel == rows) continue;
    std::swap(a[sel], a[pivot_row]);
    std::swap(b[sel], b[pivot_row]);

    const Rational inv = a[pivot_row][col].inverse();
    for (std::size_t j = col; j < cols; ++j) a[pivot_row][j] *= inv;
    b[pivot_row] *= inv;

    for (std::size_t r = 0; r < rows; ++r) {
      if (r == pivot_row || a[r][col].is_zero()) continue;
      const Rational f = a[r][col];
      for (std::size_t j = col; j < cols; ++j) {
        if (!a[pivot_row][j].is_zero()) a[r][j] -= f * a[pivot_row][j];
      }
      b[r] -= f * b[pivot_row];
    }
    pivot_col_of_row.push_back(col);
    ++pivot_row;
  }

  for (std::size_t r = pivot_row; r < rows; ++r) {
    if (!b[r].is_zero()) return {SolveStatus::Inconsistent, {}};
  }
  if (pivot_row < cols) return {SolveStatus::Underdetermined, {}};

  SolveResult out{SolveStatus::Unique, std::vector<Rational>(cols)};
  for (std::size_t r = 0; r < pivot_row; ++r) out.x[pivot_col_of_row[r]] = b[r];
  return out;
}

}  // namespace liftforge

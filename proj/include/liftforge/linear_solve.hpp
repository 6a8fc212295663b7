#pragma once

#include <optional>
#include <vector>

#include "liftforge/rational.hpp"

namespace liftforge {

enum class SolveStatus { Unique, Inconsistent, Underdetermined };

struct SolveResult {
  SolveStatus status = SolveStatus::Inconsistent;
  std::vector<Rational> x;  // filled only when status == Unique
};

/// Exact Gauss-Jordan elimination of A x = b. A may have more rows than
/// columns; the system must be consistent and of full column rank for a
/// Unique result.
SolveResult solve_exact(std::vector<std::vector<Rational>> a, std::vector<Rational> b);

}  // namespace liftforge

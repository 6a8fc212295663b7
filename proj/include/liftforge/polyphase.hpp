#pragma once

// Polyphase-with-advance representation: F(z) = F0(z^2) + z F1(z^2), with
// component samples f_j(k) = f(2k - j). A filter bank's polyphase matrix has
// the polyphase vector of H_i(z) in row i.

#include <array>
#include <string>

#include "liftforge/laurent.hpp"

namespace liftforge {

struct PolyVector {
  LaurentPoly f0;
  LaurentPoly f1;

  /// Join of the component support intervals.
  SupportInterval suppint() const { return f0.suppint().join(f1.suppint()); }
  std::int64_t order() const;
  bool is_zero() const { return f0.is_zero() && f1.is_zero(); }

  friend bool operator==(const PolyVector&, const PolyVector&) = default;
};

struct ScalarPair {
  LaurentPoly h0;
  LaurentPoly h1;

  friend bool operator==(const ScalarPair&, const ScalarPair&) = default;
};

class PolyMatrix {
 public:
  PolyMatrix() = default;  // zero matrix
  PolyMatrix(LaurentPoly a00, LaurentPoly a01, LaurentPoly a10, LaurentPoly a11);
  PolyMatrix(const PolyVector& row0, const PolyVector& row1);

  static PolyMatrix identity();
  static PolyMatrix diagonal(const Rational& d0, const Rational& d1);
  /// diag(1/K, K).
  static PolyMatrix gain(const Rational& k);

  const LaurentPoly& at(int i, int j) const { return e_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]; }
  LaurentPoly& at(int i, int j) { return e_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]; }

  PolyVector row(int i) const { return {at(i, 0), at(i, 1)}; }
  bool is_identity() const { return *this == identity(); }

  /// Join of the row-vector support intervals.
  SupportInterval suppint() const { return row(0).suppint().join(row(1).suppint()); }
  /// Matrix order from the matrix support interval; ZeroFilter for zero.
  std::int64_t order() const;

  friend bool operator==(const PolyMatrix&, const PolyMatrix&) = default;

 private:
  std::array<std::array<LaurentPoly, 2>, 2> e_;
};

PolyVector analyze(const LaurentPoly& f);
LaurentPoly synthesize(const PolyVector& v);

PolyMatrix mat_mul(const PolyMatrix& a, const PolyMatrix& b);
PolyVector mat_apply(const PolyMatrix& a, const PolyVector& v);
PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b);
PolyVector operator*(const PolyMatrix& a, const PolyVector& v);
PolyMatrix operator*(const Rational& c, const PolyMatrix& a);

LaurentPoly det(const PolyMatrix& a);
/// [[a11, -a01], [-a10, a00]]; equals the inverse when det(a) = 1.
PolyMatrix adjugate(const PolyMatrix& a);
/// M(z) -> M(z^2), entrywise.
PolyMatrix upsample(const PolyMatrix& a);
PolyVector upsample(const PolyVector& v);

/// Row i yields H_i(z) = H_i0(z^2) + z H_i1(z^2).
ScalarPair scalar_filters(const PolyMatrix& m);
/// Analyzes each filter into a row. No symmetry validation.
PolyMatrix bank_from_scalars(const LaurentPoly& h0, const LaurentPoly& h1);

std::string to_string(const PolyMatrix& m);

}  // namespace liftforge

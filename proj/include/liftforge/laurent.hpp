#pragma once

// Laurent polynomials over the rationals.
//
// Index convention: a LaurentPoly stores f(n) as the coefficient of z^-n, so
// F(z) = sum_n f(n) z^-n. Negative n is an advance; z itself is the monomial
// at n = -1.

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "liftforge/rational.hpp"

namespace liftforge {

/// Closed integer interval [lo, hi], or Empty.
class SupportInterval {
 public:
  SupportInterval() = default;  // Empty
  SupportInterval(std::int64_t lo, std::int64_t hi);

  static SupportInterval empty_interval() { return {}; }

  bool empty() const { return !bounds_.has_value(); }
  std::int64_t lo() const;
  std::int64_t hi() const;
  /// hi - lo; requires non-empty.
  std::int64_t length() const { return hi() - lo(); }

  /// Smallest closed interval containing both. Empty is the identity.
  SupportInterval join(const SupportInterval& other) const;
  /// Minkowski sum of endpoints. Empty absorbs.
  SupportInterval operator+(const SupportInterval& other) const;
  SupportInterval scaled(std::int64_t factor) const;

  /// Non-proper containment of `inner` in *this. Empty is contained in everything.
  bool contains(const SupportInterval& inner) const;
  bool properly_contains(const SupportInterval& inner) const {
    return contains(inner) && !(inner == *this);
  }

  std::string to_string() const;

  friend bool operator==(const SupportInterval&, const SupportInterval&) = default;

 private:
  std::optional<std::pair<std::int64_t, std::int64_t>> bounds_;
};

/// Linear-phase symmetry tag. `center2` is twice the symmetry center, so odd
/// values are half-integer centers.
struct SymmetryClass {
  enum class Kind { WS, HS, WA, HA, None };

  Kind kind = Kind::None;
  std::int64_t center2 = 0;

  bool symmetric() const { return kind == Kind::WS || kind == Kind::HS; }
  bool antisymmetric() const { return kind == Kind::WA || kind == Kind::HA; }
  std::string to_string() const;

  friend bool operator==(const SymmetryClass&, const SymmetryClass&) = default;
};

class LaurentPoly {
 public:
  struct Term {
    std::int64_t n;
    Rational coeff;
  };

  LaurentPoly() = default;
  explicit LaurentPoly(const Rational& constant);

  /// c * z^-n.
  static LaurentPoly monomial(std::int64_t n, const Rational& c = Rational(1));
  /// c * z^power, i.e. the monomial at n = -power.
  static LaurentPoly z_pow(std::int64_t power, const Rational& c = Rational(1));
  /// Sums the given terms; repeated indices accumulate.
  static LaurentPoly from_terms(const std::vector<Term>& terms);
  static LaurentPoly from_terms(std::initializer_list<Term> terms) {
    return from_terms(std::vector<Term>(terms));
  }
  /// Dense coefficients f(start), f(start+1), ...
  static LaurentPoly from_dense(std::int64_t start, std::vector<Rational> coeffs);

  bool is_zero() const { return coeffs_.empty(); }
  Rational coeff(std::int64_t n) const;
  /// Nonzero terms in ascending n.
  std::vector<Term> terms() const;
  std::size_t term_count() const;

  SupportInterval suppint() const;
  /// First and last stored index; require nonzero.
  std::int64_t lo() const;
  std::int64_t hi() const;
  /// Dense coefficients from lo() to hi(); interior entries may be zero.
  const std::vector<Rational>& dense() const { return coeffs_; }

  Rational eval_at_one() const;
  bool is_dyadic() const;

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const Rational& c);

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator*(LaurentPoly a, const Rational& c) { return a *= c; }
  friend LaurentPoly operator*(const Rational& c, LaurentPoly a) { return a *= c; }

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.lo_ == b.lo_ && a.coeffs_ == b.coeffs_;
  }

 private:
  void canonicalize();

  std::int64_t lo_ = 0;
  std::vector<Rational> coeffs_;  // front and back nonzero, or empty
};

LaurentPoly lp_add(const LaurentPoly& p, const LaurentPoly& q);
LaurentPoly lp_mul(const LaurentPoly& p, const LaurentPoly& q);
/// F(z) -> F(z^2).
LaurentPoly lp_upsample(const LaurentPoly& p);
/// F(z) -> F(z^-1).
LaurentPoly lp_reflect(const LaurentPoly& p);
/// F(z) -> z^-k F(z).
LaurentPoly lp_delay(const LaurentPoly& p, std::int64_t k);

SupportInterval suppint(const LaurentPoly& p);
/// b - a of the support; ZeroFilter for the zero polynomial.
std::int64_t order(const LaurentPoly& p);
/// floor((b - a + 1) / 2); ZeroFilter for the zero polynomial.
std::int64_t supp_rad(const LaurentPoly& p);
SupportInterval join(const SupportInterval& i, const SupportInterval& j);

SymmetryClass classify_symmetry(const LaurentPoly& p);
bool is_dyadic(const LaurentPoly& p);

/// Human-readable form in powers of z, highest power first, e.g.
/// "z^4 + 2z^2 + z + 3 + z^-1".
std::string to_string(const LaurentPoly& p);
/// Inverse of to_string; also accepts rational coefficients like "1/2z" or
/// "-3/4 z^-2" and arbitrary term order.
LaurentPoly parse_laurent(std::string_view text);

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p);
std::ostream& operator<<(std::ostream& os, const SupportInterval& s);

}  // namespace liftforge

#include "liftforge/polyphase.hpp"

#include "liftforge/error.hpp"

namespace liftforge {

std::int64_t PolyVector::order() const {
  const auto s = suppint();
  if (s.empty()) throw LiftingError(ErrorCode::ZeroFilter, "order of a zero polyphase vector");
  return s.length();
}

PolyMatrix::PolyMatrix(LaurentPoly a00, LaurentPoly a01, LaurentPoly a10, LaurentPoly a11)
    : e_{{{std::move(a00), std::move(a01)}, {std::move(a10), std::move(a11)}}} {}

PolyMatrix::PolyMatrix(const PolyVector& row0, const PolyVector& row1)
    : PolyMatrix(row0.f0, row0.f1, row1.f0, row1.f1) {}

PolyMatrix PolyMatrix::identity() { return diagonal(Rational(1), Rational(1)); }

PolyMatrix PolyMatrix::diagonal(const Rational& d0, const Rational& d1) {
  return {LaurentPoly(d0), LaurentPoly(), LaurentPoly(), LaurentPoly(d1)};
}

PolyMatrix PolyMatrix::gain(const Rational& k) {
  if (k.is_zero()) throw LiftingError(ErrorCode::ZeroScale, "gain K = 0");
  return diagonal(k.inverse(), k);
}

std::int64_t PolyMatrix::order() const {
  const auto s = suppint();
  if (s.empty()) throw LiftingError(ErrorCode::ZeroFilter, "order of the zero matrix");
  return s.length();
}

PolyVector analyze(const LaurentPoly& f) {
  if (f.is_zero()) return {};
  std::vector<LaurentPoly::Term> even;
  std::vector<LaurentPoly::Term> odd;
  for (const auto& t : f.terms()) {
    // f0(k) = f(2k), f1(k) = f(2k - 1)
    if (t.n % 2 == 0) {
      even.push_back({t.n / 2, t.coeff});
    } else {
      odd.push_back({(t.n + 1) / 2, t.coeff});
    }
  }
  return {LaurentPoly::from_terms(even), LaurentPoly::from_terms(odd)};
}

LaurentPoly synthesize(const PolyVector& v) {
  return lp_upsample(v.f0) + LaurentPoly::z_pow(1) * lp_upsample(v.f1);
}

PolyMatrix mat_mul(const PolyMatrix& a, const PolyMatrix& b) {
  PolyMatrix out;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) out.at(i, j) = a.at(i, 0) * b.at(0, j) + a.at(i, 1) * b.at(1, j);
  }
  return out;
}

PolyVector mat_apply(const PolyMatrix& a, const PolyVector& v) {
  return {a.at(0, 0) * v.f0 + a.at(0, 1) * v.f1, a.at(1, 0) * v.f0 + a.at(1, 1) * v.f1};
}

PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) { return mat_mul(a, b); }
PolyVector operator*(const PolyMatrix& a, const PolyVector& v) { return mat_apply(a, v); }

PolyMatrix operator*(const Rational& c, const PolyMatrix& a) {
  return {c * a.at(0, 0), c * a.at(0, 1), c * a.at(1, 0), c * a.at(1, 1)};
}

LaurentPoly det(const PolyMatrix& a) { return a.at(0, 0) * a.at(1, 1) - a.at(0, 1) * a.at(1, 0); }

PolyMatrix adjugate(const PolyMatrix& a) { return {a.at(1, 1), -a.at(0, 1), -a.at(1, 0), a.at(0, 0)}; }

PolyMatrix upsample(const PolyMatrix& a) {
  return {lp_upsample(a.at(0, 0)), lp_upsample(a.at(0, 1)), lp_upsample(a.at(1, 0)), lp_upsample(a.at(1, 1))};
}

PolyVector upsample(const PolyVector& v) { return {lp_upsample(v.f0), lp_upsample(v.f1)}; }

ScalarPair scalar_filters(const PolyMatrix& m) { return {synthesize(m.row(0)), synthesize(m.row(1))}; }

PolyMatrix bank_from_scalars(const LaurentPoly& h0, const LaurentPoly& h1) {
  return {analyze(h0), analyze(h1)};
}

std::string to_string(const PolyMatrix& m) {
  return "[[" + to_string(m.at(0, 0)) + ", " + to_string(m.at(0, 1)) + "], [" + to_string(m.at(1, 0)) + ", " +
         to_string(m.at(1, 1)) + "]]";
}

}  // namespace liftforge

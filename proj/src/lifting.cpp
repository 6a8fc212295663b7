#include "liftforge/lifting.hpp"

#include <algorithm>

#include "liftforge/error.hpp"

namespace liftforge {

LiftingStep::LiftingStep(int m, LaurentPoly filter) : m_(m), s_(std::move(filter)) {
  if (m != 0 && m != 1) {
    throw LiftingError(ErrorCode::DomainError, "update characteristic must be 0 or 1, got " + std::to_string(m));
  }
  if (s_.is_zero()) throw LiftingError(ErrorCode::ZeroFilter, "lifting filter is zero");
}

Cascade::Cascade(Rational gain, std::vector<LiftingStep> steps, PolyMatrix base)
    : gain_(std::move(gain)), steps_(std::move(steps)), base_(std::move(base)) {
  if (gain_.is_zero()) throw LiftingError(ErrorCode::ZeroScale, "cascade gain K = 0");
}

PolyMatrix step_matrix(const LiftingStep& s) {
  if (s.upper()) return {LaurentPoly(Rational(1)), s.filter(), LaurentPoly(), LaurentPoly(Rational(1))};
  return {LaurentPoly(Rational(1)), LaurentPoly(), s.filter(), LaurentPoly(Rational(1))};
}

namespace {

// Row update for a lifting step: row m += S * row (1 - m).
PolyMatrix lift_rows(const LiftingStep& s, const PolyMatrix& e) {
  PolyMatrix out = e;
  const int m = s.m();
  for (int j = 0; j < 2; ++j) out.at(m, j) += s.filter() * e.at(1 - m, j);
  return out;
}

}  // namespace

PolyMatrix evaluate(const Cascade& c) {
  PolyMatrix e = c.base();
  for (const auto& s : c.steps()) e = step_matrix(s) * e;
  return PolyMatrix::gain(c.gain()) * e;
}

IntermediateTrace trace(const Cascade& c) {
  IntermediateTrace t;
  t.matrices.push_back(c.base());
  t.scalars.push_back(scalar_filters(c.base()));
  for (const auto& s : c.steps()) {
    t.matrices.push_back(step_matrix(s) * t.matrices.back());
    ScalarPair next = t.scalars.back();
    const LaurentPoly update = lp_upsample(s.filter()) * (s.m() == 0 ? next.h1 : next.h0);
    (s.m() == 0 ? next.h0 : next.h1) += update;
    t.scalars.push_back(std::move(next));
  }
  return t;
}

bool is_irreducible(const Cascade& c) {
  const auto& st = c.steps();
  for (std::size_t i = 1; i < st.size(); ++i) {
    if (st[i].m() == st[i - 1].m()) return false;
  }
  return true;
}

LiftingStep conjugate_step(const LiftingStep& s, const Rational& alpha) {
  if (alpha.is_zero()) throw LiftingError(ErrorCode::ZeroScale, "conjugation by alpha = 0");
  const Rational sq = alpha * alpha;
  return {s.m(), s.upper() ? s.filter() * sq.inverse() : s.filter() * sq};
}

Cascade transfer_gain(const Cascade& c, const Rational& alpha) {
  if (alpha.is_zero()) throw LiftingError(ErrorCode::ZeroScale, "gain transfer by alpha = 0");
  std::vector<LiftingStep> steps;
  steps.reserve(c.size());
  for (const auto& s : c.steps()) steps.push_back(conjugate_step(s, alpha));
  return {c.gain() / alpha, std::move(steps), PolyMatrix::gain(alpha) * c.base()};
}

bool is_order_increasing(const Cascade& c) {
  if (!is_irreducible(c)) throw LiftingError(ErrorCode::NotIrreducible, "order-increase requires an irreducible cascade");
  PolyMatrix e = c.base();
  std::int64_t prev = e.order();
  for (const auto& s : c.steps()) {
    e = lift_rows(s, e);
    const std::int64_t cur = e.order();
    if (cur <= prev) return false;
    prev = cur;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Signals

Signal Signal::from_poly(const LaurentPoly& p) {
  if (p.is_zero()) return {};
  return {p.lo(), p.dense()};
}

LaurentPoly Signal::to_poly() const { return LaurentPoly::from_dense(start, samples); }

namespace {

// Signal phases x'_0(k) = x(2k), x'_1(k) = x(2k + 1), so that
// Y(z) = H(z) X'(z) with the advance-convention polyphase matrix.
PolyVector split_signal(const LaurentPoly& x) {
  std::vector<LaurentPoly::Term> even;
  std::vector<LaurentPoly::Term> odd;
  for (const auto& t : x.terms()) {
    if (t.n % 2 == 0) {
      even.push_back({t.n / 2, t.coeff});
    } else {
      odd.push_back({(t.n - 1) / 2, t.coeff});
    }
  }
  return {LaurentPoly::from_terms(even), LaurentPoly::from_terms(odd)};
}

LaurentPoly merge_signal(const PolyVector& v) {
  return lp_upsample(v.f0) + lp_delay(lp_upsample(v.f1), 1);
}

PolyMatrix base_inverse(const PolyMatrix& b) {
  const LaurentPoly d = det(b);
  if (d.is_zero() || d.term_count() != 1) {
    throw LiftingError(ErrorCode::NotUnimodular, "base determinant " + to_string(d) + " is not a monomial");
  }
  // d = c z^-n, so d^-1 = c^-1 z^n.
  const LaurentPoly dinv = LaurentPoly::monomial(-d.lo(), d.coeff(d.lo()).inverse());
  const PolyMatrix adj = adjugate(b);
  return {dinv * adj.at(0, 0), dinv * adj.at(0, 1), dinv * adj.at(1, 0), dinv * adj.at(1, 1)};
}

}  // namespace

Subbands apply_analysis(const Cascade& c, const Signal& x) {
  PolyVector v = c.base() * split_signal(x.to_poly());
  for (const auto& s : c.steps()) {
    if (s.upper()) {
      v.f0 += s.filter() * v.f1;
    } else {
      v.f1 += s.filter() * v.f0;
    }
  }
  v.f0 *= c.gain().inverse();
  v.f1 *= c.gain();
  return {Signal::from_poly(v.f0), Signal::from_poly(v.f1)};
}

Signal apply_synthesis(const Cascade& c, const Subbands& bands) {
  PolyVector v{bands.low.to_poly() * c.gain(), bands.high.to_poly() * c.gain().inverse()};
  for (auto it = c.steps().rbegin(); it != c.steps().rend(); ++it) {
    if (it->upper()) {
      v.f0 -= it->filter() * v.f1;
    } else {
      v.f1 -= it->filter() * v.f0;
    }
  }
  return Signal::from_poly(merge_signal(base_inverse(c.base()) * v));
}

}  // namespace liftforge

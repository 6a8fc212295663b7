#include "liftforge/factor.hpp"

#include <algorithm>
#include <array>
#include <optional>

#include "liftforge/error.hpp"
#include "liftforge/linear_solve.hpp"

namespace liftforge {

namespace {

// Free parameters of a lifting filter with support radius t: one basis
// polynomial per mirror pair of taps, taken from the left half.
std::vector<LaurentPoly> filter_basis(bool ws, int m, std::int64_t t) {
  std::vector<LaurentPoly> basis;
  basis.reserve(static_cast<std::size_t>(t));
  for (std::int64_t j = 0; j < t; ++j) {
    if (ws && m == 0) {
      const std::int64_t n = -t + 1 + j;  // symmetric about 1/2
      basis.push_back(LaurentPoly::monomial(n) + LaurentPoly::monomial(1 - n));
    } else if (ws) {
      const std::int64_t n = -t + j;  // symmetric about -1/2
      basis.push_back(LaurentPoly::monomial(n) + LaurentPoly::monomial(-1 - n));
    } else {
      const std::int64_t n = -t + j;  // antisymmetric about 0
      basis.push_back(LaurentPoly::monomial(n) - LaurentPoly::monomial(-n));
    }
  }
  return basis;
}

// Finds S = sum x_j basis_j such that target - S(z^2) other vanishes outside
// `window`. Returns nothing when no unique solution exists.
std::optional<LaurentPoly> solve_peel(const LaurentPoly& target, const LaurentPoly& other,
                                      const std::vector<LaurentPoly>& basis, const SupportInterval& window) {
  std::vector<LaurentPoly> cols;
  cols.reserve(basis.size());
  SupportInterval span = target.suppint();
  for (const auto& b : basis) {
    cols.push_back(lp_upsample(b) * other);
    span = span.join(cols.back().suppint());
  }
  std::vector<std::vector<Rational>> a;
  std::vector<Rational> rhs;
  for (std::int64_t n = span.lo(); n <= span.hi(); ++n) {
    if (!window.empty() && window.lo() <= n && n <= window.hi()) continue;
    std::vector<Rational> row;
    row.reserve(cols.size());
    for (const auto& c : cols) row.push_back(c.coeff(n));
    a.push_back(std::move(row));
    rhs.push_back(target.coeff(n));
  }
  const SolveResult sol = solve_exact(std::move(a), std::move(rhs));
  if (sol.status != SolveStatus::Unique) return std::nullopt;
  LaurentPoly s;
  for (std::size_t j = 0; j < basis.size(); ++j) s += basis[j] * sol.x[j];
  return s;
}

std::string shift_hint(const SymmetryClass& got, std::int64_t want_center2) {
  if (!got.symmetric() || (got.center2 - want_center2) % 2 != 0) return "";
  const std::int64_t shift = (got.center2 - want_center2) / 2;
  return "; symmetric about the wrong center, shift by z^" + std::to_string(shift);
}

int select_lifted_row(const PolyMatrix& e, const std::array<std::int64_t, 2>& r, const char* engine) {
  const auto o0 = e.row(0).order();
  const auto o1 = e.row(1).order();
  if (o0 == o1) {
    throw LiftingError(ErrorCode::NotFactorable, std::string(engine) + ": polyphase rows have equal order " +
                                                     std::to_string(o0) + " but radii " + std::to_string(r[0]) +
                                                     ", " + std::to_string(r[1]));
  }
  const int m = o0 > o1 ? 0 : 1;
  if (r[static_cast<std::size_t>(m)] <= r[static_cast<std::size_t>(1 - m)]) {
    throw LiftingError(ErrorCode::NotFactorable,
                       std::string(engine) + ": polyphase and scalar orders disagree on the lifted row");
  }
  return m;
}

void certify(FactorResult& out) {
  const Cascade& c = out.cascade;
  out.irreducible = is_irreducible(c);
  out.membership = cascade_in_structure(c, out.kind);
  if (!out.irreducible || !out.membership.verdict) {
    throw LiftingError(ErrorCode::NotFactorable, "peeled cascade is not an irreducible member of " +
                                                     std::string(to_string(out.kind)));
  }
  out.radii = predict_radii(c, out.kind);
  out.membership.merge(check_radius_trace(c, out.kind));
  out.membership.merge(check_support_covering(c, out.kind));
  out.order_increasing = is_order_increasing(c);
  if (!out.order_increasing) out.membership.add(-1, "order-increase", "factorization is not order-increasing");
}

void require_unimodular(const PolyMatrix& h, const char* engine) {
  const LaurentPoly d = det(h);
  if (!(d == LaurentPoly(Rational(1)))) {
    throw LiftingError(ErrorCode::NotUnimodular, std::string(engine) + ": det(H) = " + to_string(d) + ", expected 1");
  }
}

}  // namespace

FactorResult factor_ws(const PolyMatrix& h) {
  require_unimodular(h, "factor_ws");
  const auto [h0, h1] = scalar_filters(h);
  if (h0.is_zero() || h1.is_zero()) throw LiftingError(ErrorCode::NotWSClass, "factor_ws: zero filter");
  const auto s0 = classify_symmetry(h0);
  const auto s1 = classify_symmetry(h1);
  if (s0.kind != SymmetryClass::Kind::WS || s0.center2 != 0) {
    throw LiftingError(ErrorCode::NotWSClass,
                       "factor_ws: H0 is " + s0.to_string() + ", expected WS(0)" + shift_hint(s0, 0));
  }
  if (s1.kind != SymmetryClass::Kind::WS || s1.center2 != -2) {
    throw LiftingError(ErrorCode::NotWSClass,
                       "factor_ws: H1 is " + s1.to_string() + ", expected WS(-1)" + shift_hint(s1, -2));
  }

  PolyMatrix e = h;
  std::vector<LiftingStep> peeled;
  Rational gain;
  while (true) {
    const auto [e0, e1] = scalar_filters(e);
    const std::array<std::int64_t, 2> r{supp_rad(e0), supp_rad(e1)};
    if (r[0] == 0 && r[1] == 0) {
      gain = e1.coeff(-1);
      if (gain.is_zero() || !(e == PolyMatrix::gain(gain))) {
        throw LiftingError(ErrorCode::NotFactorable, "factor_ws: remainder " + to_string(e) + " is not diag(1/K, K)");
      }
      break;
    }
    const int m = select_lifted_row(e, r, "factor_ws");
    const std::int64_t diff = r[static_cast<std::size_t>(m)] - r[static_cast<std::size_t>(1 - m)];
    if (diff % 2 == 0) {
      throw LiftingError(ErrorCode::NotFactorable, "factor_ws: radii " + std::to_string(r[0]) + ", " +
                                                       std::to_string(r[1]) + " have equal parity");
    }
    const std::int64_t t = (diff + 1) / 2;
    const std::int64_t center = -m;
    const std::int64_t keep = std::max<std::int64_t>(r[static_cast<std::size_t>(1 - m)] - 1, 0);
    const auto& target = m == 0 ? e0 : e1;
    const auto& other = m == 0 ? e1 : e0;
    const auto s = solve_peel(target, other, filter_basis(true, m, t), SupportInterval(center - keep, center + keep));
    if (!s || s->is_zero() || supp_rad(*s) != t) {
      throw LiftingError(ErrorCode::NotFactorable, "factor_ws: no HS lifting filter of radius " + std::to_string(t) +
                                                       " reduces row " + std::to_string(m) + " after " +
                                                       std::to_string(peeled.size()) + " steps");
    }
    peeled.emplace_back(m, *s);
    e = step_matrix(LiftingStep(m, -*s)) * e;
  }

  // Peeling from the left sees gamma_K-conjugated steps; undo the conjugation.
  std::vector<LiftingStep> steps;
  steps.reserve(peeled.size());
  const Rational undo = gain.inverse();
  for (auto it = peeled.rbegin(); it != peeled.rend(); ++it) steps.push_back(conjugate_step(*it, undo));

  FactorResult out;
  out.cascade = Cascade(gain, std::move(steps));
  out.kind = is_reversible(out.cascade) ? StructureKind::WSReversible : StructureKind::WSIrreversible;
  if (!(evaluate(out.cascade) == h)) throw LiftingError(ErrorCode::NotFactorable, "factor_ws: reconstruction mismatch");
  certify(out);
  return out;
}

FactorResult factor_hs(const PolyMatrix& h) {
  require_unimodular(h, "factor_hs");
  const auto [h0, h1] = scalar_filters(h);
  if (h0.is_zero() || h1.is_zero()) throw LiftingError(ErrorCode::NotHSClass, "factor_hs: zero filter");
  const auto s0 = classify_symmetry(h0);
  const auto s1 = classify_symmetry(h1);
  if (s0.kind != SymmetryClass::Kind::HS || s0.center2 != -1) {
    throw LiftingError(ErrorCode::NotHSClass,
                       "factor_hs: H0 is " + s0.to_string() + ", expected HS(-1/2)" + shift_hint(s0, -1));
  }
  if (s1.kind != SymmetryClass::Kind::HA || s1.center2 != -1) {
    throw LiftingError(ErrorCode::NotHSClass, "factor_hs: H1 is " + s1.to_string() + ", expected HA(-1/2)");
  }

  PolyMatrix e = h;
  std::vector<LiftingStep> peeled;
  while (true) {
    const auto [e0, e1] = scalar_filters(e);
    const std::array<std::int64_t, 2> r{supp_rad(e0), supp_rad(e1)};
    if (r[0] == r[1]) break;
    const int m = select_lifted_row(e, r, "factor_hs");
    const std::int64_t diff = r[static_cast<std::size_t>(m)] - r[static_cast<std::size_t>(1 - m)];
    if (diff % 2 != 0) {
      throw LiftingError(ErrorCode::NotFactorable, "factor_hs: radii " + std::to_string(r[0]) + ", " +
                                                       std::to_string(r[1]) + " have opposite parity");
    }
    const std::int64_t t = diff / 2;
    const std::int64_t keep = r[static_cast<std::size_t>(1 - m)];
    const auto& target = m == 0 ? e0 : e1;
    const auto& other = m == 0 ? e1 : e0;
    const auto s = solve_peel(target, other, filter_basis(false, m, t), SupportInterval(-keep, keep - 1));
    if (!s || s->is_zero() || supp_rad(*s) != t) {
      throw LiftingError(ErrorCode::NotFactorable, "factor_hs: no WA lifting filter of radius " + std::to_string(t) +
                                                       " reduces row " + std::to_string(m) + " after " +
                                                       std::to_string(peeled.size()) + " steps");
    }
    peeled.emplace_back(m, *s);
    e = step_matrix(LiftingStep(m, -*s)) * e;
  }

  if (const auto base_report = base_in_class(e, StructureKind::HSIrreversible); !base_report.verdict) {
    throw LiftingError(ErrorCode::NotFactorable,
                       "factor_hs: remainder is not a concentric equal-length HS base (" +
                           base_report.violations.front().rule + ": " + base_report.violations.front().detail + ")");
  }

  FactorResult out;
  out.cascade = Cascade(Rational(1), std::vector<LiftingStep>(peeled.rbegin(), peeled.rend()), e);
  out.kind = is_reversible(out.cascade) ? StructureKind::HSReversible : StructureKind::HSIrreversible;
  if (!(evaluate(out.cascade) == h)) throw LiftingError(ErrorCode::NotFactorable, "factor_hs: reconstruction mismatch");
  certify(out);
  return out;
}

std::string_view to_string(Normalization n) {
  return n == Normalization::UnitGain ? "unit_gain" : "B0_at_1_equals_1";
}

Normalization default_normalization(const FactorResult& r) {
  return r.cascade.gain() == Rational(1) ? Normalization::UnitGain : Normalization::B0AtOneEqualsOne;
}

FactorResult normalize_rescaling(const FactorResult& r, Normalization convention) {
  Rational alpha;
  if (convention == Normalization::UnitGain) {
    alpha = r.cascade.gain();
  } else {
    alpha = scalar_filters(r.cascade.base()).h0.eval_at_one();
    if (alpha.is_zero()) throw LiftingError(ErrorCode::DCZero, "base lowpass has B0(1) = 0");
  }
  if (alpha == Rational(1)) return r;
  if (is_ws(r.kind)) {
    throw LiftingError(ErrorCode::NotInStructure,
                       "normalize_rescaling: WS factorizations keep the identity base, cannot transfer gain " +
                           alpha.to_string());
  }
  FactorResult out;
  out.cascade = transfer_gain(r.cascade, alpha);
  out.kind = is_reversible(out.cascade) ? StructureKind::HSReversible : StructureKind::HSIrreversible;
  certify(out);
  return out;
}

bool verify_roundtrip(const Cascade& c, StructureKind kind) {
  if (!is_irreducible(c)) throw LiftingError(ErrorCode::NotIrreducible, "verify_roundtrip: cascade is reducible");
  if (const auto rep = cascade_in_structure(c, kind); !rep.verdict) {
    throw LiftingError(ErrorCode::NotInStructure, "verify_roundtrip: " + rep.violations.front().rule + ": " +
                                                      rep.violations.front().detail);
  }
  const PolyMatrix h = evaluate(c);
  if (is_ws(kind)) return factor_ws(h).cascade == c;
  const FactorResult r = factor_hs(h);
  if (is_reversible(kind)) return r.cascade == c;
  return transfer_gain(r.cascade, r.cascade.gain()) == transfer_gain(c, c.gain());
}

bool is_reversible(const Cascade& c) {
  if (!(c.gain() == Rational(1))) return false;
  for (const auto& s : c.steps()) {
    if (!s.filter().is_dyadic()) return false;
  }
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      if (!c.base().at(i, j).is_dyadic()) return false;
    }
  }
  return true;
}

}  // namespace liftforge

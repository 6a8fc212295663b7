#include "liftforge/structures.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <tuple>

#include "liftforge/error.hpp"

namespace liftforge {

std::string_view to_string(StructureKind kind) {
  switch (kind) {
    case StructureKind::WSIrreversible: return "WSIrreversible";
    case StructureKind::WSReversible: return "WSReversible";
    case StructureKind::HSIrreversible: return "HSIrreversible";
    case StructureKind::HSReversible: return "HSReversible";
  }
  return "Unknown";
}

StructureKind parse_structure_kind(std::string_view text) {
  std::string t(text);
  std::transform(t.begin(), t.end(), t.begin(), [](unsigned char ch) { return static_cast<char>(std::tolower(ch)); });
  if (t == "ws" || t == "wsirreversible") return StructureKind::WSIrreversible;
  if (t == "wsr" || t == "wsreversible") return StructureKind::WSReversible;
  if (t == "hs" || t == "hsirreversible") return StructureKind::HSIrreversible;
  if (t == "hsr" || t == "hsreversible") return StructureKind::HSReversible;
  throw LiftingError(ErrorCode::ParseError, "unknown structure '" + std::string(text) + "'");
}

void MembershipReport::add(int stage, std::string rule, std::string detail) {
  verdict = false;
  violations.push_back({stage, std::move(rule), std::move(detail)});
}

void MembershipReport::merge(const MembershipReport& other) {
  if (!other.verdict) verdict = false;
  violations.insert(violations.end(), other.violations.begin(), other.violations.end());
  notes.insert(notes.end(), other.notes.begin(), other.notes.end());
}

namespace {

SymmetryClass required_filter_symmetry(StructureKind kind, int m) {
  if (is_ws(kind)) return {SymmetryClass::Kind::HS, m == 0 ? 1 : -1};
  return {SymmetryClass::Kind::WA, 0};
}

void require_irreducible_member(const Cascade& c, StructureKind kind, const char* op) {
  if (!is_irreducible(c)) throw LiftingError(ErrorCode::NotIrreducible, std::string(op) + ": cascade is reducible");
  const auto report = cascade_in_structure(c, kind);
  if (!report.verdict) {
    const auto& v = report.violations.front();
    throw LiftingError(ErrorCode::NotInStructure, std::string(op) + ": not in " + std::string(to_string(kind)) +
                                                      " (stage " + std::to_string(v.stage) + ", " + v.rule + ": " +
                                                      v.detail + ")");
  }
}

bool is_odd(std::int64_t v) { return v % 2 != 0; }

}  // namespace

bool filter_in_class(const LaurentPoly& s, StructureKind kind, int m) {
  if (s.is_zero()) throw LiftingError(ErrorCode::ZeroFilter, "class test of a zero lifting filter");
  if (m != 0 && m != 1) throw LiftingError(ErrorCode::DomainError, "update characteristic must be 0 or 1");
  if (!(classify_symmetry(s) == required_filter_symmetry(kind, m))) return false;
  return !is_reversible(kind) || s.is_dyadic();
}

MembershipReport base_in_class(const PolyMatrix& b, StructureKind kind) {
  MembershipReport r;
  if (is_ws(kind)) {
    if (!b.is_identity()) r.add(-1, "base-identity", "WS structures require the identity base, got " + to_string(b));
    return r;
  }

  const LaurentPoly d = det(b);
  if (!(d == LaurentPoly(Rational(1)))) r.add(-1, "base-unimodular", "det(B) = " + to_string(d));

  const auto [b0, b1] = scalar_filters(b);
  if (b0.is_zero() || b1.is_zero()) {
    r.add(-1, "base-nonzero", "base filter bank has a zero filter");
    return r;
  }
  const SymmetryClass want0{SymmetryClass::Kind::HS, -1};
  const SymmetryClass want1{SymmetryClass::Kind::HA, -1};
  if (order(b0) % 2 == 0 || order(b1) % 2 == 0) {
    r.add(-1, "base-even-length",
          "base filters have lengths " + std::to_string(order(b0) + 1) + " and " + std::to_string(order(b1) + 1));
  }
  if (const auto s = classify_symmetry(b0); !(s == want0)) {
    r.add(-1, "base-lowpass-symmetry", "B0 is " + s.to_string() + ", expected " + want0.to_string());
  }
  if (const auto s = classify_symmetry(b1); !(s == want1)) {
    r.add(-1, "base-highpass-antisymmetry", "B1 is " + s.to_string() + ", expected " + want1.to_string());
  }
  if (order(b0) != order(b1)) {
    r.add(-1, "base-equal-order",
          "order(B0) = " + std::to_string(order(b0)) + ", order(B1) = " + std::to_string(order(b1)));
  }
  if (kind == StructureKind::HSReversible) {
    if (!b.at(0, 0).is_dyadic() || !b.at(0, 1).is_dyadic() || !b.at(1, 0).is_dyadic() || !b.at(1, 1).is_dyadic()) {
      r.add(-1, "base-dyadic", "reversible base has non-dyadic coefficients");
    }
    r.notes.push_back(
        "necessary-conditions-only: reversible HS bases are checked for dyadic coefficients, not for the "
        "existence of a scaling-free dyadic lifting factorization");
  }
  return r;
}

MembershipReport cascade_in_structure(const Cascade& c, StructureKind kind) {
  MembershipReport r = base_in_class(c.base(), kind);
  for (std::size_t i = 0; i < c.size(); ++i) {
    const auto& step = c.steps()[i];
    if (!filter_in_class(step.filter(), kind, step.m())) {
      const auto sym = classify_symmetry(step.filter());
      std::string detail = "m=" + std::to_string(step.m()) + " filter " + to_string(step.filter()) + " is " +
                           sym.to_string() + ", expected " + required_filter_symmetry(kind, step.m()).to_string();
      if (is_reversible(kind) && !step.filter().is_dyadic()) detail += " with dyadic coefficients";
      r.add(static_cast<int>(i), "filter-class", detail);
    }
  }
  if (is_reversible(kind) && !(c.gain() == Rational(1))) {
    r.add(static_cast<int>(c.size()), "gain", "reversible structures require K = 1, got K = " + c.gain().to_string());
  }
  return r;
}

RadiusTrace predict_radii(const Cascade& c, StructureKind kind) {
  require_irreducible_member(c, kind, "predict_radii");
  const bool ws = is_ws(kind);
  auto intervals = [ws](std::int64_t r0, std::int64_t r1) {
    if (ws) return std::make_pair(SupportInterval(-r0, r0), SupportInterval(-r1 - 1, r1 - 1));
    return std::make_pair(SupportInterval(-r0, r0 - 1), SupportInterval(-r1, r1 - 1));
  };

  std::array<std::int64_t, 2> r{0, 0};
  if (!ws) r[0] = r[1] = supp_rad(scalar_filters(c.base()).h0);

  RadiusTrace out;
  auto [s0, s1] = intervals(r[0], r[1]);
  out.stages.push_back({-1, -1, 0, r[0], r[1], s0, s1});
  for (std::size_t n = 0; n < c.size(); ++n) {
    const auto& step = c.steps()[n];
    const int m = step.m();
    const std::int64_t t = supp_rad(step.filter());
    r[static_cast<std::size_t>(m)] = r[static_cast<std::size_t>(1 - m)] + 2 * t - (ws ? 1 : 0);
    std::tie(s0, s1) = intervals(r[0], r[1]);
    out.stages.push_back({static_cast<int>(n), m, t, r[0], r[1], s0, s1});
  }
  return out;
}

MembershipReport check_radius_trace(const Cascade& c, StructureKind kind) {
  const RadiusTrace predicted = predict_radii(c, kind);
  const IntermediateTrace actual = trace(c);
  const bool ws = is_ws(kind);
  MembershipReport r;
  for (const auto& st : predicted.stages) {
    const auto& pair = actual.scalar_stage(st.stage);
    const std::array<const LaurentPoly*, 2> filters{&pair.h0, &pair.h1};
    const std::array<SupportInterval, 2> want{st.suppint0, st.suppint1};
    std::array<std::int64_t, 2> radii{0, 0};
    for (std::size_t i = 0; i < 2; ++i) {
      const auto got = filters[i]->suppint();
      if (got.empty()) {
        r.add(st.stage, "radius-recursion", "E" + std::to_string(i) + " vanished");
        continue;
      }
      radii[i] = supp_rad(*filters[i]);
      const std::int64_t center2 = got.lo() + got.hi();
      const std::int64_t want_center2 = ws ? -2 * static_cast<std::int64_t>(i) : -1;
      if (center2 != want_center2) {
        r.add(st.stage, "centering",
              "E" + std::to_string(i) + " support " + got.to_string() + " is not centered at " +
                  (ws ? std::to_string(-static_cast<int>(i)) : std::string("-1/2")));
      }
      if (!(got == want[i])) {
        r.add(st.stage, "radius-recursion",
              "E" + std::to_string(i) + " support " + got.to_string() + ", predicted " + want[i].to_string());
      }
    }
    const bool opposite = is_odd(radii[0] + radii[1]);
    if (ws && st.stage >= 0 && !opposite) {
      r.add(st.stage, "parity",
            "WS radii " + std::to_string(radii[0]) + ", " + std::to_string(radii[1]) + " should have opposite parity");
    }
    if (!ws && opposite) {
      r.add(st.stage, "parity",
            "HS radii " + std::to_string(radii[0]) + ", " + std::to_string(radii[1]) + " should have equal parity");
    }
  }
  return r;
}

SupportInterval polyphase_suppint_formula(PhaseCenter center, std::int64_t r) {
  const std::int64_t min_r = center == PhaseCenter::MinusHalf ? 1 : 0;
  if (r < min_r) {
    throw LiftingError(ErrorCode::DomainError,
                       "support radius " + std::to_string(r) + " below minimum " + std::to_string(min_r));
  }
  if (!is_odd(r)) return {-r / 2, r / 2};
  switch (center) {
    case PhaseCenter::Zero: return {(-r + 1) / 2, (r + 1) / 2};
    case PhaseCenter::MinusOne: return {(-r - 1) / 2, (r - 1) / 2};
    case PhaseCenter::MinusHalf: return {-(r - 1) / 2, (r - 1) / 2};
  }
  return {};
}

MembershipReport check_support_covering(const Cascade& c, StructureKind kind) {
  require_irreducible_member(c, kind, "check_support_covering");
  const IntermediateTrace t = trace(c);
  MembershipReport r;
  for (std::size_t n = 0; n < c.size(); ++n) {
    const int m = c.steps()[n].m();
    const auto& e = t.stage(static_cast<int>(n));
    const auto lifted = e.row(m).suppint();
    const auto other = e.row(1 - m).suppint();
    if (!lifted.properly_contains(other)) {
      r.add(static_cast<int>(n), "support-covering",
            "suppint(e_" + std::to_string(1 - m) + ") = " + other.to_string() + " not strictly inside suppint(e_" +
                std::to_string(m) + ") = " + lifted.to_string());
    }
  }
  return r;
}

SufficientConditionsReport check_sufficient_conditions(const Cascade& c, StructureKind kind) {
  SufficientConditionsReport out;
  const auto b0 = c.base().row(0).suppint();
  const auto b1 = c.base().row(1).suppint();
  out.equal_base_suppints = b0 == b1;
  if (!out.equal_base_suppints) {
    out.report.add(-1, "equal-base-suppint",
                   "suppint(b0) = " + b0.to_string() + " differs from suppint(b1) = " + b1.to_string());
  }

  if (!cascade_in_structure(c, kind).verdict) {
    out.report.notes.push_back("cascade is not a member of " + std::string(to_string(kind)));
  }

  if (!is_irreducible(c)) {
    out.report.add(-1, "irreducible", "support covering is only defined for irreducible cascades");
    return out;
  }

  const IntermediateTrace t = trace(c);
  out.support_covering = true;
  for (std::size_t n = 0; n < c.size(); ++n) {
    const int m = c.steps()[n].m();
    const auto& e = t.stage(static_cast<int>(n));
    if (!e.row(m).suppint().properly_contains(e.row(1 - m).suppint())) {
      out.support_covering = false;
      out.report.add(static_cast<int>(n), "support-covering",
                     "suppint(e_" + std::to_string(1 - m) + ") = " + e.row(1 - m).suppint().to_string() +
                         " not strictly inside " + e.row(m).suppint().to_string());
    }
  }

  if (out.equal_base_suppints && out.support_covering) {
    for (const auto& e : t.matrices) out.order_chain.push_back(e.order());
    for (std::size_t i = 1; i < out.order_chain.size(); ++i) {
      if (out.order_chain[i] <= out.order_chain[i - 1]) {
        out.report.add(static_cast<int>(i) - 1, "order-increase",
                       "order(E) fell from " + std::to_string(out.order_chain[i - 1]) + " to " +
                           std::to_string(out.order_chain[i]));
      }
    }
    if (!is_order_increasing(c)) out.report.add(-1, "order-increase", "cascade is not order-increasing");
  }
  return out;
}

}  // namespace liftforge

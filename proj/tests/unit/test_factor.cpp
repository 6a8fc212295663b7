#include <doctest.h>

#include "liftforge/error.hpp"
#include "liftforge/random.hpp"
#include "oracles.hpp"

using namespace liftforge;

namespace {

const LaurentPoly kS0 = parse_laurent("z^2 + z + 1 + z^-1");
const LaurentPoly kS1 = parse_laurent("1 + z^-1");
const LaurentPoly kH0 = parse_laurent("z^4 + 2z^2 + z + 3 + z^-1 + 2z^-2 + z^-4");
const LaurentPoly kH1 = parse_laurent("z^4 + z^2 + z + 1 + z^-2");
const LaurentPoly kOne(Rational(1));

Cascade reference() { return Cascade(Rational(1), {LiftingStep(1, kS0), LiftingStep(0, kS1)}); }

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const LiftingError& e) {
    return e.code();
  }
  FAIL("expected a LiftingError");
  return ErrorCode::DomainError;
}

// Independent WS peeler: divides out the lifting filter from the top
// coefficients of the longer scalar filter, then completes it by symmetry.
struct Peeled {
  Rational gain;
  std::vector<LiftingStep> steps;  // in application order
};

Peeled division_peel(PolyMatrix e) {
  std::vector<LiftingStep> peeled;
  for (int guard = 0; guard < 64; ++guard) {
    const auto [e0, e1] = scalar_filters(e);
    const std::int64_t r0 = supp_rad(e0), r1 = supp_rad(e1);
    if (r0 == 0 && r1 == 0) {
      Peeled out;
      out.gain = e1.coeff(-1);
      REQUIRE(e == PolyMatrix::diagonal(out.gain.inverse(), out.gain));
      for (auto it = peeled.rbegin(); it != peeled.rend(); ++it) {
        const Rational sq = out.gain * out.gain;
        out.steps.emplace_back(it->m(), it->m() == 0 ? it->filter() * sq : it->filter() * sq.inverse());
      }
      return out;
    }
    const int m = r0 > r1 ? 0 : 1;
    const LaurentPoly& target = m == 0 ? e0 : e1;
    const LaurentPoly& other = m == 0 ? e1 : e0;
    const std::int64_t t = ((m == 0 ? r0 - r1 : r1 - r0) + 1) / 2;
    const std::int64_t s_hi = m == 0 ? t : t - 1;   // S about +1/2 or -1/2
    const std::int64_t s_c2 = m == 0 ? 1 : -1;
    const std::int64_t h = other.hi();
    oracle::Taps s;
    for (std::int64_t j = s_hi; j > s_hi - t; --j) {
      Rational acc = target.coeff(2 * j + h);
      for (const auto& [jj, c] : s) acc = acc - c * other.coeff(2 * j + h - 2 * jj);
      s[j] = acc / other.coeff(h);
      s[s_c2 - j] = s[j];
    }
    const LaurentPoly filter = oracle::from_taps(s);
    peeled.emplace_back(m, filter);
    e = step_matrix(LiftingStep(m, -filter)) * e;
  }
  FAIL("division peeler did not terminate");
  return {};
}

// Right peeling: factor H^-1 from the left and turn it around.
Cascade right_peel(const PolyMatrix& h) {
  const Peeled inv = division_peel(adjugate(h));
  // H^-1 = D_{1/K} T_{N-1} ... T_0 with T_i = gamma_K (S_{N-1-i})^-1.
  const Rational k = inv.gain.inverse();
  const Rational sq = k * k;
  std::vector<LiftingStep> steps;
  for (auto it = inv.steps.rbegin(); it != inv.steps.rend(); ++it) {
    const LaurentPoly neg = -it->filter();
    steps.emplace_back(it->m(), it->m() == 0 ? neg * sq : neg * sq.inverse());
  }
  return Cascade(k, std::move(steps));
}

}  // namespace

TEST_CASE("reference bank factors into the reference steps") {
  const FactorResult r = factor_ws(bank_from_scalars(kH0, kH1));
  CHECK(r.cascade == reference());
  CHECK(r.kind == StructureKind::WSReversible);
  CHECK(r.irreducible);
  CHECK(r.order_increasing);
  CHECK(r.membership.verdict);
  REQUIRE(r.radii.stages.size() == 3);
  CHECK(r.radii.stages[2].r0 == 4);
  CHECK(r.radii.stages[2].r1 == 3);
  // The order-3 filter is the one applied first; the last one is first order.
  CHECK(order(r.cascade.steps().front().filter()) == 3);
  CHECK(order(r.cascade.steps().back().filter()) == 1);
}

TEST_CASE("trivial WS factorizations") {
  const FactorResult id = factor_ws(PolyMatrix::identity());
  CHECK(id.cascade.size() == 0);
  CHECK(id.cascade.gain() == Rational(1));
  const FactorResult g = factor_ws(PolyMatrix::diagonal(Rational(1, 3), Rational(3)));
  CHECK(g.cascade.size() == 0);
  CHECK(g.cascade.gain() == Rational(3));
  CHECK(g.kind == StructureKind::WSIrreversible);
}

TEST_CASE("WS input validation") {
  CHECK(code_of([] { (void)factor_ws(bank_from_scalars(kH0 * Rational(2), kH1)); }) == ErrorCode::NotUnimodular);
  // Opposite shifts keep det = 1 but move both centers.
  const PolyMatrix shifted = bank_from_scalars(lp_delay(kH0, 2), lp_delay(kH1, -2));
  REQUIRE(det(shifted) == kOne);
  try {
    (void)factor_ws(shifted);
    FAIL("expected NotWSClass");
  } catch (const LiftingError& e) {
    CHECK(e.code() == ErrorCode::NotWSClass);
    CHECK(std::string(e.what()).find("shift") != std::string::npos);
  }
  CHECK(code_of([] { (void)factor_ws(haar_base()); }) == ErrorCode::NotWSClass);
}

TEST_CASE("HS factorizations") {
  const FactorResult haar = factor_hs(haar_base());
  CHECK(haar.cascade.size() == 0);
  CHECK(haar.cascade.base() == haar_base());
  CHECK(haar.cascade.gain() == Rational(1));

  CHECK(code_of([] { (void)factor_hs(PolyMatrix::identity()); }) == ErrorCode::NotHSClass);
  CHECK(code_of([] { (void)factor_hs(bank_from_scalars(parse_laurent("z + 1"), parse_laurent("z - 1"))); }) ==
        ErrorCode::NotUnimodular);
  CHECK(code_of([] { (void)factor_hs(bank_from_scalars(parse_laurent("1/2 z + 1/2"), parse_laurent("z + 1"))); }) ==
        ErrorCode::NotUnimodular);

  // A 6-tap/10-tap style bank over a concentric 6/6 base.
  GenParams p;
  p.dyadic = false;
  Rng rng(trial_seed(kDefaultSeed, 501, 0));
  const PolyMatrix b66 = random_hs_base(rng, p, 3);
  REQUIRE(order(scalar_filters(b66).h0) == 5);
  REQUIRE(order(scalar_filters(b66).h1) == 5);
  const Cascade c610(Rational(1), {LiftingStep(1, parse_laurent("3/7 z - 3/7 z^-1"))}, b66);
  const auto [f0, f1] = scalar_filters(evaluate(c610));
  CHECK(f0.term_count() <= 6);
  CHECK(order(f1) == 9);
  const FactorResult r = factor_hs(evaluate(c610));
  CHECK(r.cascade == c610);
}

TEST_CASE("rescaled Haar lifted by one step normalizes back to Haar") {
  for (const Rational& alpha : {Rational(2), Rational(3, 2), Rational(-1)}) {
    CAPTURE(alpha);
    const LaurentPoly a = parse_laurent("5/3 z - 5/3 z^-1");
    const PolyMatrix bank = step_matrix(LiftingStep(0, a)) * (PolyMatrix::gain(alpha) * haar_base());
    const FactorResult r = factor_hs(bank);
    CHECK(evaluate(r.cascade) == bank);
    const FactorResult n = normalize_rescaling(r, Normalization::B0AtOneEqualsOne);
    CHECK(n.cascade.base() == haar_base());
    CHECK(n.cascade.gain() == alpha);
    REQUIRE(n.cascade.size() == 1);
    // D_alpha moved out of the base conjugates the upper step by alpha.
    CHECK(n.cascade.steps()[0].filter() == a * (alpha * alpha));
    CHECK(evaluate(n.cascade) == bank);
  }
}

TEST_CASE("normalization conventions") {
  const Cascade c(Rational(3), {LiftingStep(1, parse_laurent("z^2 - z^-2"))}, haar_base());
  const FactorResult r = factor_hs(evaluate(c));
  CHECK(r.cascade.gain() == Rational(1));
  CHECK(default_normalization(r) == Normalization::UnitGain);
  CHECK(normalize_rescaling(r, Normalization::UnitGain).cascade == r.cascade);
  const FactorResult dc = normalize_rescaling(r, Normalization::B0AtOneEqualsOne);
  CHECK(scalar_filters(dc.cascade.base()).h0.eval_at_one() == Rational(1));
  CHECK(evaluate(dc.cascade) == evaluate(c));
  CHECK(dc.cascade == c);
  CHECK(default_normalization(dc) == Normalization::B0AtOneEqualsOne);

  // A base whose lowpass has no DC response.
  FactorResult bad = r;
  const PolyMatrix dc0 = bank_from_scalars(parse_laurent("z^2 + z - 1 - z^-1"), LaurentPoly());
  bad.cascade = Cascade(Rational(1), {}, dc0);
  CHECK(code_of([&] { (void)normalize_rescaling(bad, Normalization::B0AtOneEqualsOne); }) == ErrorCode::DCZero);

  const FactorResult ws = factor_ws(PolyMatrix::gain(Rational(2)));
  CHECK(code_of([&] { (void)normalize_rescaling(ws, Normalization::UnitGain); }) == ErrorCode::NotInStructure);
  CHECK(normalize_rescaling(factor_ws(evaluate(reference())), Normalization::UnitGain).cascade == reference());
}

TEST_CASE("round-trip verification") {
  CHECK(verify_roundtrip(reference(), StructureKind::WSReversible));
  CHECK(verify_roundtrip(Cascade(Rational(5, 2), reference().steps()), StructureKind::WSIrreversible));
  const Cascade hs(Rational(-7, 4), {LiftingStep(0, parse_laurent("z - z^-1")), LiftingStep(1, parse_laurent("2z - 2z^-1"))},
                   haar_base());
  CHECK(verify_roundtrip(hs, StructureKind::HSIrreversible));
  CHECK(code_of([] {
          (void)verify_roundtrip(Cascade(Rational(1), {LiftingStep(0, kS1), LiftingStep(0, kS1)}),
                                 StructureKind::WSIrreversible);
        }) == ErrorCode::NotIrreducible);
  CHECK(code_of([] { (void)verify_roundtrip(Cascade(Rational(3), reference().steps()), StructureKind::WSReversible); }) ==
        ErrorCode::NotInStructure);
}

TEST_CASE("reversibility") {
  CHECK(is_reversible(reference()));
  CHECK_FALSE(is_reversible(Cascade(Rational(2), reference().steps())));
  CHECK_FALSE(is_reversible(Cascade(Rational(1), {LiftingStep(0, parse_laurent("1/3 + 1/3 z^-1"))})));
  CHECK(is_reversible(Cascade(Rational(1), {}, haar_base())));
  CHECK_FALSE(is_reversible(Cascade(Rational(1), {}, bank_from_scalars(parse_laurent("1/3 z + 1/3"), parse_laurent("3/2 z - 3/2")))));
}

TEST_CASE("canonicity: left peeling, right peeling and the division peeler agree") {
  GenParams p;
  for (int i = 0; i < 150; ++i) {
    Rng rng(trial_seed(kDefaultSeed, 502, static_cast<std::uint64_t>(i)));
    p.dyadic = i % 2 == 0;
    const Cascade c = random_cascade(rng, p, i % 2 == 0 ? StructureKind::WSReversible : StructureKind::WSIrreversible);
    const PolyMatrix h = evaluate(c);
    CAPTURE(i);
    const FactorResult left = factor_ws(h);
    REQUIRE(left.cascade == c);
    const Peeled div = division_peel(h);
    CHECK(Cascade(div.gain, div.steps) == c);
    const Cascade right = right_peel(h);
    CHECK(right == left.cascade);
    CHECK(right.size() == left.cascade.size());
  }
}

TEST_CASE("HS rescaling equivalence") {
  GenParams p;
  p.dyadic = false;
  for (int i = 0; i < 150; ++i) {
    Rng rng(trial_seed(kDefaultSeed, 503, static_cast<std::uint64_t>(i)));
    const Cascade c = random_cascade(rng, p, StructureKind::HSIrreversible);
    const Rational alpha = random_gain(rng, p);
    CAPTURE(i);
    // (K, S, B) and (K / alpha, alpha^-+2 S, D_alpha B), built by hand.
    std::vector<LiftingStep> scaled;
    for (const auto& s : c.steps()) {
      const Rational f = s.m() == 0 ? (alpha * alpha).inverse() : alpha * alpha;
      scaled.emplace_back(s.m(), s.filter() * f);
    }
    const PolyMatrix db = PolyMatrix::diagonal(alpha.inverse(), alpha) * c.base();
    const Cascade c2(c.gain() / alpha, scaled, db);
    const PolyMatrix h = evaluate(c);
    REQUIRE(evaluate(c2) == h);
    const FactorResult r = factor_hs(h);
    const FactorResult r2 = factor_hs(evaluate(c2));
    CHECK(r.cascade == r2.cascade);
    CHECK(r.cascade.size() == c.size());
    for (const auto conv : {Normalization::UnitGain, Normalization::B0AtOneEqualsOne}) {
      FactorResult fc;
      fc.kind = StructureKind::HSIrreversible;
      fc.cascade = c;
      FactorResult fc2 = fc;
      fc2.cascade = c2;
      const Cascade n1 = normalize_rescaling(fc, conv).cascade;
      CHECK(n1 == normalize_rescaling(fc2, conv).cascade);
      CHECK(n1 == normalize_rescaling(r, conv).cascade);
    }
    CHECK(verify_roundtrip(c, StructureKind::HSIrreversible));
  }
}

TEST_CASE("verify_roundtrip holds for every structure kind") {
  GenParams p;
  for (int i = 0; i < 200; ++i) {
    Rng rng(trial_seed(kDefaultSeed, 504, static_cast<std::uint64_t>(i)));
    const auto kind = static_cast<StructureKind>(i % 4);
    p.dyadic = is_reversible(kind);
    const Cascade c = random_cascade(rng, p, kind);
    CAPTURE(i);
    CHECK(verify_roundtrip(c, kind));
    const FactorResult r = is_ws(kind) ? factor_ws(evaluate(c)) : factor_hs(evaluate(c));
    CHECK(r.cascade.size() == c.size());
    if (is_reversible(kind)) CHECK(r.kind == kind);
  }
}

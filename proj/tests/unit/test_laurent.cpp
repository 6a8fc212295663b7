#include <doctest.h>

#include "liftforge/error.hpp"
#include "liftforge/random.hpp"
#include "oracles.hpp"

using namespace liftforge;

namespace {

const LaurentPoly kH0 = parse_laurent("z^4 + 2z^2 + z + 3 + z^-1 + 2z^-2 + z^-4");
const LaurentPoly kH1 = parse_laurent("z^4 + z^2 + z + 1 + z^-2");

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const LiftingError& e) {
    return e.code();
  }
  FAIL("expected a LiftingError");
  return ErrorCode::DomainError;
}

}  // namespace

TEST_CASE("support interval basics") {
  CHECK(SupportInterval().empty());
  CHECK(join(SupportInterval(0, 1), SupportInterval(3, 4)) == SupportInterval(0, 4));
  CHECK(join(SupportInterval(-2, 2), SupportInterval(-1, 1)) == SupportInterval(-2, 2));
  CHECK(join(SupportInterval(), SupportInterval(5, 7)) == SupportInterval(5, 7));
  CHECK(join(SupportInterval(5, 7), SupportInterval()) == SupportInterval(5, 7));
  CHECK(SupportInterval(0, 2) + SupportInterval(-1, 1) == SupportInterval(-1, 3));
  CHECK((SupportInterval() + SupportInterval(0, 1)).empty());
  CHECK(SupportInterval(-2, 1).scaled(2) == SupportInterval(-4, 2));
  CHECK(SupportInterval(-2, 2).properly_contains(SupportInterval(-1, 2)));
  CHECK_FALSE(SupportInterval(-2, 2).properly_contains(SupportInterval(-2, 2)));
  CHECK(code_of([] { (void)SupportInterval(3, 2); }) == ErrorCode::DomainError);
  CHECK(code_of([] { (void)SupportInterval().lo(); }) == ErrorCode::ZeroFilter);
}

TEST_CASE("canonical storage") {
  const LaurentPoly p = LaurentPoly::from_dense(-3, {Rational(0), Rational(2), Rational(0), Rational(1), Rational(0)});
  CHECK(p.suppint() == SupportInterval(-2, 0));
  CHECK(p.term_count() == 2);
  CHECK(p.dense().front() == Rational(2));
  CHECK(LaurentPoly::from_terms({{4, Rational(1)}, {4, Rational(-1)}}).is_zero());
  CHECK(LaurentPoly::z_pow(3) == LaurentPoly::monomial(-3));
  CHECK(LaurentPoly().suppint().empty());
}

TEST_CASE("addition examples") {
  CHECK((LaurentPoly(Rational(1)) + LaurentPoly(Rational(-1))).is_zero());
  CHECK(lp_add(parse_laurent("1 + z^-1"), parse_laurent("z^2 + z")) == parse_laurent("z^2 + z + 1 + z^-1"));
  CHECK((kH0 - kH0).is_zero());
  CHECK((kH0 - kH0).suppint().empty());
}

TEST_CASE("multiplication examples") {
  const LaurentPoly a = LaurentPoly::from_dense(0, {Rational(1), Rational(2), Rational(3)});
  const LaurentPoly b = LaurentPoly::from_dense(-1, {Rational(1), Rational(-1), Rational(5)});
  CHECK(lp_mul(a, b).suppint() == SupportInterval(-1, 3));
  CHECK(a * LaurentPoly(Rational(1)) == a);
  // Hand convolution of (1 + z^-2)(z^4 + z^2 + z + 1 + z^-2).
  CHECK(lp_mul(parse_laurent("1 + z^-2"), kH1) == parse_laurent("z^4 + 2z^2 + z + 2 + z^-1 + 2z^-2 + z^-4"));
  CHECK((a * LaurentPoly()).is_zero());
}

TEST_CASE("upsampling") {
  CHECK(lp_upsample(LaurentPoly::monomial(1)) == LaurentPoly::monomial(2));
  CHECK(lp_upsample(LaurentPoly::from_dense(-2, {Rational(1), Rational(0), Rational(1), Rational(4)})).suppint() ==
        SupportInterval(-4, 2));
  CHECK(lp_upsample(LaurentPoly()).is_zero());
}

TEST_CASE("support measures") {
  const LaurentPoly s = parse_laurent("z^2 + z + 1 + z^-1");
  CHECK(suppint(s) == SupportInterval(-2, 1));
  CHECK(order(s) == 3);
  CHECK(supp_rad(s) == 2);
  CHECK(suppint(LaurentPoly(Rational(1))) == SupportInterval(0, 0));
  CHECK(order(LaurentPoly(Rational(1))) == 0);
  CHECK(supp_rad(LaurentPoly(Rational(1))) == 0);
  CHECK(suppint(kH0) == SupportInterval(-4, 4));
  CHECK(order(kH0) == 8);
  CHECK(code_of([] { (void)order(LaurentPoly()); }) == ErrorCode::ZeroFilter);
  CHECK(code_of([] { (void)supp_rad(LaurentPoly()); }) == ErrorCode::ZeroFilter);
}

TEST_CASE("symmetry classification") {
  using K = SymmetryClass::Kind;
  CHECK(classify_symmetry(parse_laurent("1 + z^-1")) == SymmetryClass{K::HS, 1});
  CHECK(classify_symmetry(parse_laurent("z^2 + z + 1 + z^-1")) == SymmetryClass{K::HS, -1});
  CHECK(classify_symmetry(parse_laurent("z - z^-1")) == SymmetryClass{K::WA, 0});
  CHECK(classify_symmetry(kH0) == SymmetryClass{K::WS, 0});
  CHECK(classify_symmetry(kH1) == SymmetryClass{K::WS, -2});
  CHECK(classify_symmetry(parse_laurent("z - 1")) == SymmetryClass{K::HA, -1});
  CHECK(classify_symmetry(parse_laurent("z^3 + 2")).kind == K::None);
  CHECK(classify_symmetry(LaurentPoly::monomial(5, Rational(7))) == SymmetryClass{K::WS, 10});
  CHECK(code_of([] { (void)classify_symmetry(LaurentPoly()); }) == ErrorCode::ZeroFilter);

  // The defining functional equations, checked through reflection.
  const LaurentPoly p0 = parse_laurent("1 + z^-1");
  CHECK(lp_reflect(p0) == LaurentPoly::z_pow(1) * p0);
  const LaurentPoly p1 = parse_laurent("z^2 + z + 1 + z^-1");
  CHECK(lp_reflect(p1) == LaurentPoly::z_pow(-1) * p1);
  const LaurentPoly wa = parse_laurent("z - z^-1");
  CHECK(lp_reflect(wa) == -wa);
}

TEST_CASE("dyadic filters") {
  CHECK(is_dyadic(parse_laurent("1/2 z + 1/2")));
  CHECK_FALSE(is_dyadic(LaurentPoly(Rational(1, 3))));
  CHECK(is_dyadic(LaurentPoly()));
}

TEST_CASE("text form round-trips") {
  for (const char* text : {"z^4 + 2z^2 + z + 3 + z^-1 + 2z^-2 + z^-4", "1/2 z + 1/2", "-3/4 z^-2", "0", "z - 1",
                           "-z^3 + 5/7"}) {
    CAPTURE(text);
    const LaurentPoly p = parse_laurent(text);
    CHECK(parse_laurent(to_string(p)) == p);
  }
  CHECK(to_string(kH1) == "z^4 + z^2 + z + 1 + z^-2");
  CHECK(parse_laurent("z^-2 + 1 + z^-2") == parse_laurent("1 + 2z^-2"));
  CHECK(parse_laurent("1/2z") == LaurentPoly::z_pow(1, Rational(1, 2)));
  for (const char* bad : {"z^", "1 +", "z^a", "2//3 z", "q"}) {
    CAPTURE(bad);
    CHECK(code_of([&] { (void)parse_laurent(bad); }) == ErrorCode::ParseError);
  }
}

TEST_CASE("randomized algebra against the tap-map oracle") {
  Rng rng(trial_seed(kDefaultSeed, 101, 0));
  GenParams p;
  p.dyadic = false;
  for (int i = 0; i < 1000; ++i) {
    auto draw = [&] {
      const auto lo = rng.uniform(-9, 9);
      return random_filter(rng, p, lo, lo + rng.uniform(0, 9));
    };
    const LaurentPoly f = draw();
    const LaurentPoly g = draw();
    const LaurentPoly fg = f * g;
    REQUIRE(fg == oracle::convolve(f, g));
    CHECK(fg.suppint() == f.suppint() + g.suppint());
    CHECK(lp_upsample(f).suppint() == SupportInterval(2 * f.lo(), 2 * f.hi()));
    // z0 = 3/2 evaluation is a ring homomorphism.
    const Rational z0(3, 2);
    CHECK(oracle::eval_at(f + g, z0) == oracle::eval_at(f, z0) + oracle::eval_at(g, z0));
    CHECK(oracle::eval_at(lp_upsample(f), z0) == oracle::eval_at(f, z0 * z0));
    CHECK(oracle::eval_at(lp_delay(f, 3), z0) == oracle::eval_at(f, z0) * oracle::power(z0, -3));
    // Covering rule.
    if (f.hi() - f.lo() >= 2) {
      const auto qlo = rng.uniform(f.lo() + 1, f.hi() - 1);
      const LaurentPoly q = random_filter(rng, p, qlo, rng.uniform(qlo, f.hi() - 1));
      CHECK((f + q).suppint() == f.suppint());
    }
    // Scaling by a constant does not change the symmetry class.
    const Rational c = random_rational(rng, p, true);
    CHECK(classify_symmetry(f * c) == classify_symmetry(f));
    // Canonical form: rebuilding from the dense vector changes nothing.
    CHECK(LaurentPoly::from_dense(fg.lo(), fg.dense()) == fg);
  }
}

TEST_CASE("randomized symmetric filters are classified exactly") {
  Rng rng(trial_seed(kDefaultSeed, 102, 0));
  GenParams p;
  using K = SymmetryClass::Kind;
  for (int i = 0; i < 500; ++i) {
    const std::int64_t c2 = rng.uniform(-6, 6);
    const bool whole = c2 % 2 == 0;
    const bool anti = rng.chance(1, 2);
    const std::int64_t r = rng.uniform(whole && anti ? 1 : (whole ? 0 : 1), 6);
    const SymmetryClass want{whole ? (anti ? K::WA : K::WS) : (anti ? K::HA : K::HS), c2};
    const LaurentPoly f = random_linear_phase(rng, p, want, r);
    CHECK(classify_symmetry(f) == want);
    CHECK(supp_rad(f) == r);
    CHECK(f.lo() + f.hi() == c2);
  }
}

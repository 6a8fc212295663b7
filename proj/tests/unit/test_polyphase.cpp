#include <doctest.h>

#include "liftforge/error.hpp"
#include "liftforge/random.hpp"
#include "oracles.hpp"

using namespace liftforge;

namespace {

const LaurentPoly kH0 = parse_laurent("z^4 + 2z^2 + z + 3 + z^-1 + 2z^-2 + z^-4");
const LaurentPoly kH1 = parse_laurent("z^4 + z^2 + z + 1 + z^-2");

PolyMatrix random_matrix(Rng& rng, const GenParams& p) {
  auto draw = [&] {
    if (rng.chance(1, 6)) return LaurentPoly();
    const auto lo = rng.uniform(-4, 4);
    return random_filter(rng, p, lo, lo + rng.uniform(0, 4));
  };
  LaurentPoly a = draw(), b = draw(), c = draw(), d = draw();
  return PolyMatrix(a, b, c, d);
}

}  // namespace

TEST_CASE("analysis of the lazy bank") {
  const PolyVector b0 = analyze(LaurentPoly(Rational(1)));
  CHECK(b0.f0 == LaurentPoly(Rational(1)));
  CHECK(b0.f1.is_zero());
  const PolyVector b1 = analyze(LaurentPoly::z_pow(1));
  CHECK(b1.f0.is_zero());
  CHECK(b1.f1 == LaurentPoly(Rational(1)));
}

TEST_CASE("analysis of the reference highpass") {
  const PolyVector v = analyze(kH1);
  std::vector<std::int64_t> even;
  for (const auto& t : v.f0.terms()) even.push_back(t.n);
  CHECK(even == std::vector<std::int64_t>{-2, -1, 0, 1});
  REQUIRE(v.f1.term_count() == 1);
  CHECK(v.f1.terms().front().n == 0);
  const auto [e, o] = oracle::split(kH1);
  CHECK(v.f0 == e);
  CHECK(v.f1 == o);
}

TEST_CASE("synthesis") {
  CHECK(synthesize({LaurentPoly(Rational(1)), LaurentPoly()}) == LaurentPoly(Rational(1)));
  CHECK(synthesize({LaurentPoly(Rational(1)), LaurentPoly(Rational(1))}) == parse_laurent("1 + z"));
  CHECK(synthesize(analyze(kH0)) == kH0);
}

TEST_CASE("matrix products") {
  const PolyMatrix a(parse_laurent("z + 2"), parse_laurent("1/3"), LaurentPoly(), parse_laurent("z^-1 - 1"));
  CHECK(PolyMatrix::identity() * a == a);
  CHECK(a * PolyMatrix::identity() == a);
  const PolyMatrix lower(LaurentPoly(Rational(1)), LaurentPoly(), parse_laurent("z^2 + z + 1 + z^-1"),
                         LaurentPoly(Rational(1)));
  const PolyMatrix upper(LaurentPoly(Rational(1)), parse_laurent("1 + z^-1"), LaurentPoly(), LaurentPoly(Rational(1)));
  const PolyMatrix h = upper * lower;
  const auto [h0, h1] = scalar_filters(h);
  CHECK(h0 == kH0);
  CHECK(h1 == kH1);
  CHECK_FALSE(upper * lower == lower * upper);
}

TEST_CASE("determinants") {
  CHECK(det(PolyMatrix::identity()) == LaurentPoly(Rational(1)));
  const PolyMatrix step(LaurentPoly(Rational(1)), parse_laurent("3z^2 - 1/7"), LaurentPoly(), LaurentPoly(Rational(1)));
  CHECK(det(step) == LaurentPoly(Rational(1)));
  CHECK(det(bank_from_scalars(kH0, kH1)) == LaurentPoly(Rational(1)));
  CHECK(det(PolyMatrix::gain(Rational(5, 3))) == LaurentPoly(Rational(1)));
  const PolyMatrix m = bank_from_scalars(kH0, kH1);
  CHECK(adjugate(m) * m == PolyMatrix::identity());
}

TEST_CASE("scalar filters and banks") {
  const auto [l0, l1] = scalar_filters(PolyMatrix::identity());
  CHECK(l0 == LaurentPoly(Rational(1)));
  CHECK(l1 == LaurentPoly::z_pow(1));
  const PolyMatrix haar = bank_from_scalars(parse_laurent("1/2 z + 1/2"), parse_laurent("z - 1"));
  CHECK(haar == PolyMatrix(LaurentPoly(Rational(1, 2)), LaurentPoly(Rational(1, 2)), LaurentPoly(Rational(-1)),
                           LaurentPoly(Rational(1))));
  CHECK(PolyMatrix::gain(Rational(2)) == PolyMatrix::diagonal(Rational(1, 2), Rational(2)));
  CHECK_THROWS_AS((void)PolyMatrix::gain(Rational(0)), LiftingError);
}

TEST_CASE("polyphase identity F(z) = F0(z^2) + z F1(z^2) at rational points") {
  Rng rng(trial_seed(kDefaultSeed, 201, 0));
  GenParams p;
  p.dyadic = false;
  for (int i = 0; i < 500; ++i) {
    const auto lo = rng.uniform(-10, 10);
    const LaurentPoly f = random_filter(rng, p, lo, lo + rng.uniform(0, 12));
    const PolyVector v = analyze(f);
    for (const Rational& z0 : {Rational(2), Rational(-1, 3), Rational(5, 4)}) {
      CHECK(oracle::eval_at(f, z0) == oracle::eval_at(v.f0, z0 * z0) + z0 * oracle::eval_at(v.f1, z0 * z0));
    }
    CHECK(synthesize(v) == f);
    CHECK(analyze(synthesize(v)) == v);
    CHECK(v.suppint() == join(v.f0.suppint(), v.f1.suppint()));
  }
}

TEST_CASE("randomized matrix algebra") {
  Rng rng(trial_seed(kDefaultSeed, 202, 0));
  GenParams p;
  p.dyadic = false;
  for (int i = 0; i < 300; ++i) {
    const PolyMatrix a = random_matrix(rng, p);
    const PolyMatrix b = random_matrix(rng, p);
    CHECK(det(a * b) == det(a) * det(b));
    CHECK(upsample(a * b) == upsample(a) * upsample(b));
    const Rational z0(3, 5);
    // Entry (0, 0) of a*b evaluated pointwise.
    CHECK(oracle::eval_at((a * b).at(0, 0), z0) ==
          oracle::eval_at(a.at(0, 0), z0) * oracle::eval_at(b.at(0, 0), z0) +
              oracle::eval_at(a.at(0, 1), z0) * oracle::eval_at(b.at(1, 0), z0));
    SupportInterval rows = join(a.row(0).suppint(), a.row(1).suppint());
    CHECK(a.suppint() == rows);
    const PolyVector v{a.at(1, 0), b.at(0, 1)};
    const PolyVector w{b.at(1, 1), a.at(0, 1)};
    const Rational c = random_rational(rng, p, false);
    const PolyVector lin{v.f0 * c + w.f0, v.f1 * c + w.f1};
    const PolyVector av = a * v, aw = a * w, al = a * lin;
    CHECK(al.f0 == av.f0 * c + aw.f0);
    CHECK(al.f1 == av.f1 * c + aw.f1);
  }
}

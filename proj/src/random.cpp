#include "liftforge/random.hpp"

#include "liftforge/error.hpp"
#include "liftforge/linear_solve.hpp"

namespace liftforge {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t trial_seed(std::uint64_t master, std::uint64_t suite, std::uint64_t trial) {
  return splitmix64(master ^ (suite * 0x100000001b3ULL + trial));
}

std::int64_t Rng::uniform(std::int64_t lo, std::int64_t hi) {
  if (hi < lo) throw LiftingError(ErrorCode::DomainError, "empty range in Rng::uniform");
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<std::int64_t>(next() % span);
}

Rational random_rational(Rng& rng, const GenParams& p, bool nonzero) {
  std::int64_t num = 0;
  do {
    num = rng.uniform(-p.max_numerator, p.max_numerator);
  } while (nonzero && num == 0);
  std::int64_t den = std::int64_t{1} << rng.uniform(0, p.max_den_exp);
  if (!p.dyadic && rng.chance(1, 2)) den *= 2 * rng.uniform(0, (p.max_odd_den - 1) / 2) + 1;
  return Rational(mpz_class(static_cast<long>(num)), mpz_class(static_cast<long>(den)));
}

Rational random_gain(Rng& rng, const GenParams& p) {
  GenParams q = p;
  q.max_numerator = 5;
  q.max_den_exp = 2;
  return random_rational(rng, q, true);
}

namespace {

// Fills a pair-symmetric filter over [lo, hi] where tap lo+j mirrors hi-j
// with sign `mirror`. An odd-length antisymmetric filter gets a zero center.
LaurentPoly fill_mirrored(Rng& rng, const GenParams& p, std::int64_t lo, std::int64_t hi, int mirror) {
  std::vector<LaurentPoly::Term> terms;
  for (std::int64_t n = lo; n <= hi - (n - lo); ++n) {
    const std::int64_t partner = hi - (n - lo);
    if (n == partner && mirror < 0) break;
    const bool outer = n == lo;
    Rational c = outer || !rng.chance(1, 4) ? random_rational(rng, p, true) : Rational(0);
    terms.push_back({n, c});
    if (partner != n) terms.push_back({partner, mirror > 0 ? c : -c});
  }
  return LaurentPoly::from_terms(terms);
}

}  // namespace

LaurentPoly random_symmetric(Rng& rng, const GenParams& p, std::int64_t center2, std::int64_t radius) {
  return random_linear_phase(rng, p, {center2 % 2 == 0 ? SymmetryClass::Kind::WS : SymmetryClass::Kind::HS, center2},
                             radius);
}

LaurentPoly random_linear_phase(Rng& rng, const GenParams& p, SymmetryClass cls, std::int64_t radius) {
  const bool whole = cls.center2 % 2 == 0;
  std::int64_t lo = 0;
  std::int64_t hi = 0;
  if (whole) {
    lo = cls.center2 / 2 - radius;
    hi = cls.center2 / 2 + radius;
  } else {
    // floor division for negative odd center2
    const std::int64_t c = cls.center2 >= 0 ? cls.center2 / 2 : (cls.center2 - 1) / 2;  // floor(center)
    lo = c + 1 - radius;
    hi = c + radius;
  }
  if (hi < lo || (cls.antisymmetric() && whole && radius == 0)) {
    throw LiftingError(ErrorCode::DomainError, "no " + cls.to_string() + " filter with radius " +
                                                   std::to_string(radius));
  }
  return fill_mirrored(rng, p, lo, hi, cls.symmetric() ? 1 : -1);
}

LaurentPoly random_lifting_filter(Rng& rng, const GenParams& p, StructureKind kind, int m, std::int64_t t) {
  if (is_ws(kind)) {
    return random_linear_phase(rng, p, {SymmetryClass::Kind::HS, m == 0 ? 1 : -1}, t);
  }
  return random_linear_phase(rng, p, {SymmetryClass::Kind::WA, 0}, t);
}

PolyMatrix haar_base() {
  return PolyMatrix(LaurentPoly(Rational(1, 2)), LaurentPoly(Rational(1, 2)), LaurentPoly(Rational(-1)),
                    LaurentPoly(Rational(1)));
}

PolyMatrix random_hs_base(Rng& rng, const GenParams& p, std::int64_t radius) {
  if (radius < 1) throw LiftingError(ErrorCode::DomainError, "HS base radius must be positive");
  for (int attempt = 0; attempt < 64; ++attempt) {
    const LaurentPoly b0 = random_linear_phase(rng, p, {SymmetryClass::Kind::HS, -1}, radius);
    if (b0.eval_at_one().is_zero()) continue;
    // det is linear in the antisymmetric highpass taps; solve det = 1.
    std::vector<LaurentPoly> basis;
    for (std::int64_t j = 0; j < radius; ++j) {
      basis.push_back(LaurentPoly::monomial(-radius + j) - LaurentPoly::monomial(radius - 1 - j));
    }
    std::vector<LaurentPoly> dets;
    SupportInterval span(0, 0);
    for (const auto& b : basis) {
      dets.push_back(det(bank_from_scalars(b0, b)));
      if (!dets.back().is_zero()) span = span.join(dets.back().suppint());
    }
    std::vector<std::vector<Rational>> a;
    std::vector<Rational> rhs;
    for (std::int64_t n = span.lo(); n <= span.hi(); ++n) {
      std::vector<Rational> row;
      for (const auto& d : dets) row.push_back(d.coeff(n));
      a.push_back(std::move(row));
      rhs.push_back(Rational(n == 0 ? 1 : 0));
    }
    const SolveResult sol = solve_exact(std::move(a), std::move(rhs));
    if (sol.status != SolveStatus::Unique || sol.x[0].is_zero()) continue;
    LaurentPoly b1;
    for (std::size_t j = 0; j < basis.size(); ++j) b1 += basis[j] * sol.x[j];
    return bank_from_scalars(b0, b1);
  }
  return haar_base();
}

Cascade random_cascade(Rng& rng, const GenParams& p, StructureKind kind, const CascadeOptions& opt) {
  const int depth = opt.depth >= 0 ? opt.depth : static_cast<int>(rng.uniform(1, p.max_depth));
  int m = opt.first_m >= 0 ? opt.first_m : static_cast<int>(rng.uniform(0, 1));
  GenParams q = p;
  if (is_reversible(kind)) q.dyadic = true;

  std::vector<LiftingStep> steps;
  for (int i = 0; i < depth; ++i) {
    const bool last = i + 1 == depth;
    const std::int64_t t = last && opt.force_final_t1 ? 1 : rng.uniform(1, p.max_radius);
    steps.emplace_back(m, random_lifting_filter(rng, q, kind, m, t));
    m = 1 - m;
  }
  const Rational k = is_reversible(kind) ? Rational(1) : random_gain(rng, q);
  if (is_ws(kind)) return Cascade(k, std::move(steps));

  PolyMatrix base = haar_base();
  if (is_reversible(kind)) {
    // Rescaled Haar keeps the base dyadic with det 1.
    const std::int64_t e = rng.uniform(0, 2);
    const Rational a(mpz_class(1), mpz_class(static_cast<long>(std::int64_t{1} << e)));
    base = PolyMatrix(LaurentPoly(a / Rational(2)), LaurentPoly(a / Rational(2)), LaurentPoly(-a.inverse()),
                      LaurentPoly(a.inverse()));
  } else if (!opt.haar_base && !rng.chance(1, 3)) {
    base = random_hs_base(rng, q, rng.uniform(1, 3));
  }
  return Cascade(k, std::move(steps), base);
}

LaurentPoly random_filter(Rng& rng, const GenParams& p, std::int64_t lo, std::int64_t hi) {
  std::vector<Rational> c;
  for (std::int64_t n = lo; n <= hi; ++n) {
    const bool end = n == lo || n == hi;
    c.push_back(end || !rng.chance(1, 4) ? random_rational(rng, p, true) : Rational(0));
  }
  return LaurentPoly::from_dense(lo, std::move(c));
}

}  // namespace liftforge

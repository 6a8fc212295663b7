#pragma once
// Seeded generators for the property suites. Every draw goes through
// mt19937_64 with plain modulo reduction so that a seed reproduces the same
// cascades on every platform.
#include <cstdint>
#include <random>

#include "liftforge/factor.hpp"

namespace liftforge {

constexpr std::uint64_t kDefaultSeed = 271828;

std::uint64_t splitmix64(std::uint64_t x);
/// Independent per-trial seed for suite `suite`, trial `trial`.
std::uint64_t trial_seed(std::uint64_t master, std::uint64_t suite, std::uint64_t trial);

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}
  std::uint64_t next() { return eng_(); }
  /// Uniform in [lo, hi].
  std::int64_t uniform(std::int64_t lo, std::int64_t hi);
  bool chance(std::uint64_t num, std::uint64_t den) { return next() % den < num; }

 private:
  std::mt19937_64 eng_;
};

struct GenParams {
  int max_depth = 6;
  std::int64_t max_radius = 4;  // lifting filter support radius t
  int max_den_exp = 4;          // dyadic denominators up to 2^4
  std::int64_t max_numerator = 8;
  bool dyadic = true;           // otherwise denominators in 1..max_odd_den too
  std::int64_t max_odd_den = 7;
};

Rational random_rational(Rng& rng, const GenParams& p, bool nonzero);
Rational random_gain(Rng& rng, const GenParams& p);

/// Symmetric filter with the given doubled center and support radius. Both
/// endpoints nonzero, interior taps zero with probability 1/4.
LaurentPoly random_symmetric(Rng& rng, const GenParams& p, std::int64_t center2, std::int64_t radius);
/// WS/HS/WA/HA filter about center2 with exactly the given support radius.
LaurentPoly random_linear_phase(Rng& rng, const GenParams& p, SymmetryClass cls, std::int64_t radius);

/// Lifting filter of the class required by `kind` for update characteristic m.
LaurentPoly random_lifting_filter(Rng& rng, const GenParams& p, StructureKind kind, int m, std::int64_t t);

/// Concentric equal-length HS base with det = 1 and B0(1) != 0. radius 1
/// returns a rescaled Haar-like base.
PolyMatrix random_hs_base(Rng& rng, const GenParams& p, std::int64_t radius);
PolyMatrix haar_base();

struct CascadeOptions {
  int depth = -1;            // -1: random in 1..max_depth
  int first_m = -1;          // -1: random
  bool force_final_t1 = false;
  bool haar_base = false;    // HS only
};

/// Irreducible cascade in the structure `kind`. WS kinds use the identity
/// base; reversible kinds use K = 1 and dyadic coefficients.
Cascade random_cascade(Rng& rng, const GenParams& p, StructureKind kind, const CascadeOptions& opt = {});

/// Random filter with exact scalar support [lo, hi], both ends nonzero.
LaurentPoly random_filter(Rng& rng, const GenParams& p, std::int64_t lo, std::int64_t hi);

}  // namespace liftforge

#pragma once

#include <cstdint>
#include <vector>

#include "liftforge/polyphase.hpp"

namespace liftforge {

/// Unit-diagonal triangular lifting step. m = 0 is upper triangular
/// [[1, S], [0, 1]] (lowpass update); m = 1 is lower triangular
/// [[1, 0], [S, 1]] (highpass update).
class LiftingStep {
 public:
  LiftingStep(int m, LaurentPoly filter);

  int m() const { return m_; }
  const LaurentPoly& filter() const { return s_; }
  bool upper() const { return m_ == 0; }

  friend bool operator==(const LiftingStep&, const LiftingStep&) = default;

 private:
  int m_;
  LaurentPoly s_;
};

/// diag(1/K, K) * S_{N-1}(z) ... S_0(z) * B(z). steps[0] is applied first
/// (rightmost in the product).
class Cascade {
 public:
  Cascade() = default;
  Cascade(Rational gain, std::vector<LiftingStep> steps, PolyMatrix base = PolyMatrix::identity());

  const Rational& gain() const { return gain_; }
  const std::vector<LiftingStep>& steps() const { return steps_; }
  const PolyMatrix& base() const { return base_; }
  std::size_t size() const { return steps_.size(); }

  friend bool operator==(const Cascade&, const Cascade&) = default;

 private:
  Rational gain_{1};
  std::vector<LiftingStep> steps_;
  PolyMatrix base_ = PolyMatrix::identity();
};

/// Intermediate partial products E^(n) for n = -1 .. N-1; index 0 is the base.
struct IntermediateTrace {
  std::vector<PolyMatrix> matrices;
  /// Scalar filters (E_0^(n), E_1^(n)) from the scalar lifting recursion.
  std::vector<ScalarPair> scalars;

  const PolyMatrix& stage(int n) const { return matrices.at(static_cast<std::size_t>(n + 1)); }
  const ScalarPair& scalar_stage(int n) const { return scalars.at(static_cast<std::size_t>(n + 1)); }
};

PolyMatrix step_matrix(const LiftingStep& s);
PolyMatrix evaluate(const Cascade& c);
IntermediateTrace trace(const Cascade& c);
bool is_irreducible(const Cascade& c);

/// gamma_alpha: D_alpha * M * D_alpha^-1 restricted to the step. Upper
/// filters scale by alpha^-2, lower filters by alpha^2.
LiftingStep conjugate_step(const LiftingStep& s, const Rational& alpha);

/// Gain transfer with alpha: (K, S_i, B) -> (K / alpha, gamma_alpha S_i,
/// D_alpha B). The evaluated bank is unchanged.
Cascade transfer_gain(const Cascade& c, const Rational& alpha);

/// Strict increase of the polyphase matrix order at every stage. Throws
/// NotIrreducible for reducible cascades.
bool is_order_increasing(const Cascade& c);

/// Finite rational sequence x(start), x(start+1), ...
struct Signal {
  std::int64_t start = 0;
  std::vector<Rational> samples;

  static Signal from_poly(const LaurentPoly& p);
  /// Zero extension outside the stored samples.
  LaurentPoly to_poly() const;
  bool empty() const { return samples.empty(); }

  friend bool operator==(const Signal&, const Signal&) = default;
};

struct Subbands {
  Signal low;
  Signal high;
};

/// Lifting-ladder analysis: y_i(k) = sum_n h_i(n) x(2k - n), computed by
/// splitting x into x(2k) and x(2k + 1), applying the base, the steps in
/// order and then the gains. Zero extension, exact arithmetic.
Subbands apply_analysis(const Cascade& c, const Signal& x);
/// Inverse ladder: undo gains, negated steps in reverse order, then the base
/// inverse. Throws NotUnimodular if det(base) is not a monomial.
Signal apply_synthesis(const Cascade& c, const Subbands& bands);

}  // namespace liftforge

#pragma once

// Irreducible linear phase lifting factorization.
//
// factor_ws peels HS lifting steps off a unimodular WS bank until only
// diag(1/K, K) remains; the result is the unique irreducible factorization
// over the identity base. factor_hs peels WA lifting steps off a unimodular
// HS bank until both filters have equal order; the remainder is the base,
// and the result is unique up to gain transfer between K and the base.
//
// Each peel solves a small exact linear system: the lifting filter S of the
// required symmetry and radius is the one that makes every coefficient of
// E_m(z) - S(z^2) E_{1-m}(z) outside the smaller predicted support vanish.

#include "liftforge/structures.hpp"

namespace liftforge {

struct FactorResult {
  StructureKind kind = StructureKind::WSIrreversible;
  Cascade cascade;
  RadiusTrace radii;
  MembershipReport membership;
  bool irreducible = true;
  bool order_increasing = true;
};

FactorResult factor_ws(const PolyMatrix& h);
FactorResult factor_hs(const PolyMatrix& h);

enum class Normalization { B0AtOneEqualsOne, UnitGain };

std::string_view to_string(Normalization n);
/// unit_gain when K is already 1, otherwise B0(1) = 1.
Normalization default_normalization(const FactorResult& r);

/// Gain transfer to the chosen convention; the evaluated bank is unchanged.
/// Throws DCZero when B0(1) = 0 under the DC convention, NotInStructure when
/// the transfer would move gain into a WS identity base.
FactorResult normalize_rescaling(const FactorResult& r, Normalization convention);

/// Evaluate, refactor with the matching engine, normalize, and compare step
/// by step. Throws NotIrreducible / NotInStructure on bad input and
/// propagates factorization errors.
bool verify_roundtrip(const Cascade& c, StructureKind kind);

/// K = 1 and every lifting filter and base coefficient dyadic.
bool is_reversible(const Cascade& c);

}  // namespace liftforge

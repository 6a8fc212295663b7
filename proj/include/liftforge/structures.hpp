#pragma once

// Membership tests and support-interval predictions for the four linear
// phase group lifting structures:
//   WS: identity base, HS lifting filters (upper filters symmetric about 1/2,
//       lower filters symmetric about -1/2), any nonzero gain.
//   HS: concentric equal-length HS base banks, whole-sample antisymmetric
//       lifting filters, any nonzero gain.
// The reversible variants restrict every lifting filter to dyadic
// coefficients and fix K = 1.

#include <cstdint>
#include <string>
#include <vector>

#include "liftforge/lifting.hpp"

namespace liftforge {

enum class StructureKind { WSIrreversible, WSReversible, HSIrreversible, HSReversible };

std::string_view to_string(StructureKind kind);
/// Accepts the enumerator names and the short forms ws, wsr, hs, hsr.
StructureKind parse_structure_kind(std::string_view text);
inline bool is_ws(StructureKind k) { return k == StructureKind::WSIrreversible || k == StructureKind::WSReversible; }
inline bool is_reversible(StructureKind k) { return k == StructureKind::WSReversible || k == StructureKind::HSReversible; }

struct Violation {
  int stage;  // -1 is the base, N the gain
  std::string rule;
  std::string detail;

  friend bool operator==(const Violation&, const Violation&) = default;
};

struct MembershipReport {
  bool verdict = true;
  std::vector<Violation> violations;
  /// Informational remarks that do not affect the verdict.
  std::vector<std::string> notes;

  void add(int stage, std::string rule, std::string detail);
  void merge(const MembershipReport& other);
};

struct StageRadii {
  int stage;         // -1 for the base
  int m;             // update characteristic; -1 for the base
  std::int64_t t;    // lifting-filter support radius; 0 for the base
  std::int64_t r0;
  std::int64_t r1;
  SupportInterval suppint0;
  SupportInterval suppint1;
};

/// Predicted support radii and scalar support intervals, base stage first.
struct RadiusTrace {
  std::vector<StageRadii> stages;
};

/// Polyphase support interval of a filter whose scalar support is centered
/// at 0, -1 or -1/2, as a function of its support radius.
enum class PhaseCenter { Zero, MinusOne, MinusHalf };

bool filter_in_class(const LaurentPoly& s, StructureKind kind, int m);
MembershipReport base_in_class(const PolyMatrix& b, StructureKind kind);
MembershipReport cascade_in_structure(const Cascade& c, StructureKind kind);

/// Radius recursion. Throws NotIrreducible or NotInStructure.
RadiusTrace predict_radii(const Cascade& c, StructureKind kind);
/// Compares predict_radii against the actual scalar trace, including the
/// centering and the parity law of the structure.
MembershipReport check_radius_trace(const Cascade& c, StructureKind kind);

SupportInterval polyphase_suppint_formula(PhaseCenter center, std::int64_t r);

/// suppint(e_{1-m_n}) strictly inside suppint(e_{m_n}) at every stage.
/// Throws NotIrreducible or NotInStructure.
MembershipReport check_support_covering(const Cascade& c, StructureKind kind);

struct SufficientConditionsReport {
  MembershipReport report;
  bool equal_base_suppints = false;  // condition 1
  bool support_covering = false;     // condition 2
  /// order(E^(n)) for n = -1 .. N-1; filled when both conditions hold.
  std::vector<std::int64_t> order_chain;
};

SufficientConditionsReport check_sufficient_conditions(const Cascade& c, StructureKind kind);

}  // namespace liftforge

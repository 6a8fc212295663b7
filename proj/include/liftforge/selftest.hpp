#pragma once
// Randomized property suites behind `liftforge selftest` and the acceptance
// binary. Each suite is a deterministic function of the master seed.
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "liftforge/random.hpp"

namespace liftforge {

struct SelftestConfig {
  std::uint64_t seed = kDefaultSeed;
  std::size_t ws_trials = 200;
  std::size_t hs_trials = 200;
  std::size_t filters_per_center = 1000;
  std::size_t support_pairs = 1000;
  std::size_t dissimilar_trials = 100;
  GenParams params;
  /// Negative control: perturbs the predicted radius and polyphase formulas
  /// by one so that suites 4 and 5 must fail.
  bool inject_radius_fault = false;
};

struct SuiteResult {
  int id = 0;
  std::string name;
  std::size_t checks = 0;
  std::size_t failures = 0;
  double seconds = 0;
  std::vector<std::string> failure_samples;  // first few only

  bool passed() const { return failures == 0 && checks > 0; }
  void check(bool ok, const std::function<std::string()>& describe);
};

/// Cascades shared by several suites: the WS reversible round-trip corpus
/// and the HS irreversible corpus.
struct Corpus {
  std::vector<Cascade> ws;
  std::vector<Cascade> hs;
  std::vector<Rational> hs_alpha;  // injected gain transfer per HS cascade
};

Corpus build_corpus(const SelftestConfig& cfg);

SuiteResult suite_fixture_regression(const SelftestConfig& cfg);
SuiteResult suite_ws_uniqueness(const SelftestConfig& cfg, const Corpus& corpus);
SuiteResult suite_hs_rescaling(const SelftestConfig& cfg, const Corpus& corpus);
SuiteResult suite_radius_traces(const SelftestConfig& cfg, const Corpus& corpus);
SuiteResult suite_polyphase_formulas(const SelftestConfig& cfg);
SuiteResult suite_order_increase(const SelftestConfig& cfg, const Corpus& corpus);
SuiteResult suite_support_algebra(const SelftestConfig& cfg);
SuiteResult suite_dissimilar_lengths(const SelftestConfig& cfg);
SuiteResult suite_det_and_pr(const SelftestConfig& cfg, const Corpus& corpus);

/// All nine suites in order.
std::vector<SuiteResult> run_selftest(const SelftestConfig& cfg);

/// The two-step WS cascade whose bank has lowpass
/// z^4 + 2z^2 + z + 3 + z^-1 + 2z^-2 + z^-4.
Cascade reference_ws_cascade();

}  // namespace liftforge

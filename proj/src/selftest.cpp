#include "liftforge/selftest.hpp"

#include <chrono>

#include "liftforge/error.hpp"

namespace liftforge {

namespace {

constexpr std::size_t kMaxSamples = 5;

enum Suite : std::uint64_t {
  kWsCorpus = 2,
  kHsCorpus = 3,
  kFormulas = 5,
  kAlgebra = 7,
  kDissimilar = 8,
  kSignals = 9,
};

class Timer {
 public:
  Timer() : start_(std::chrono::steady_clock::now()) {}
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

SuiteResult make(int id, std::string name) {
  SuiteResult r;
  r.id = id;
  r.name = std::move(name);
  return r;
}

std::string steps_to_string(const Cascade& c) {
  std::string out = "K=" + c.gain().to_string();
  for (const auto& s : c.steps()) out += " [m=" + std::to_string(s.m()) + ": " + to_string(s.filter()) + "]";
  return out;
}

// E_i is centered at -i for WS and at -1/2 for HS.
std::pair<SupportInterval, SupportInterval> expected_suppints(bool ws, std::int64_t r0, std::int64_t r1) {
  if (ws) return {SupportInterval(-r0, r0), SupportInterval(-r1 - 1, r1 - 1)};
  return {SupportInterval(-r0, r0 - 1), SupportInterval(-r1, r1 - 1)};
}

// Reference filtering: y_i(k) = sum_n h_i(n) x(2k - n).
Subbands direct_analysis(const PolyMatrix& bank, const Signal& x) {
  const auto [h0, h1] = scalar_filters(bank);
  Subbands out;
  const LaurentPoly xp = x.to_poly();
  const std::array<const LaurentPoly*, 2> hs{&h0, &h1};
  const std::array<Signal*, 2> ys{&out.low, &out.high};
  for (std::size_t i = 0; i < 2; ++i) {
    const LaurentPoly y = *hs[i] * xp;
    if (y.is_zero()) continue;
    std::vector<LaurentPoly::Term> even;
    for (const auto& t : y.terms()) {
      if (t.n % 2 == 0) even.push_back({t.n / 2, t.coeff});
    }
    *ys[i] = Signal::from_poly(LaurentPoly::from_terms(even));
  }
  return out;
}

bool same_samples(const Signal& a, const Signal& b) { return a.to_poly() == b.to_poly(); }

}  // namespace

void SuiteResult::check(bool ok, const std::function<std::string()>& describe) {
  ++checks;
  if (ok) return;
  ++failures;
  if (failure_samples.size() < kMaxSamples) failure_samples.push_back(describe());
}

Cascade reference_ws_cascade() {
  return Cascade(Rational(1), {LiftingStep(1, parse_laurent("z^2 + z + 1 + z^-1")), LiftingStep(0, parse_laurent("1 + z^-1"))});
}

Corpus build_corpus(const SelftestConfig& cfg) {
  Corpus c;
  for (std::size_t i = 0; i < cfg.ws_trials; ++i) {
    Rng rng(trial_seed(cfg.seed, kWsCorpus, i));
    c.ws.push_back(random_cascade(rng, cfg.params, StructureKind::WSReversible));
  }
  for (std::size_t i = 0; i < cfg.hs_trials; ++i) {
    Rng rng(trial_seed(cfg.seed, kHsCorpus, i));
    CascadeOptions opt;
    opt.haar_base = i % 4 == 0;
    GenParams p = cfg.params;
    p.dyadic = false;
    c.hs.push_back(random_cascade(rng, p, StructureKind::HSIrreversible, opt));
    c.hs_alpha.push_back(random_gain(rng, p));
  }
  return c;
}

SuiteResult suite_fixture_regression(const SelftestConfig&) {
  Timer timer;
  SuiteResult r = make(1, "fixture regression");
  const Cascade c = reference_ws_cascade();
  const PolyMatrix h = evaluate(c);
  const auto [h0, h1] = scalar_filters(h);
  const LaurentPoly want0 = parse_laurent("z^4 + 2z^2 + z + 3 + z^-1 + 2z^-2 + z^-4");
  const LaurentPoly want1 = parse_laurent("z^4 + z^2 + z + 1 + z^-2");
  r.check(h0 == want0, [&] { return "H0 = " + to_string(h0); });
  r.check(h1 == want1, [&] { return "H1 = " + to_string(h1); });
  try {
    const FactorResult f = factor_ws(bank_from_scalars(want0, want1));
    r.check(f.cascade == c, [&] { return "factored " + steps_to_string(f.cascade); });
  } catch (const LiftingError& e) {
    r.check(false, [&] { return std::string(e.what()); });
  }
  r.seconds = timer.seconds();
  return r;
}

SuiteResult suite_ws_uniqueness(const SelftestConfig&, const Corpus& corpus) {
  Timer timer;
  SuiteResult r = make(2, "WS uniqueness round-trip");
  for (std::size_t i = 0; i < corpus.ws.size(); ++i) {
    const Cascade& c = corpus.ws[i];
    try {
      const FactorResult f = factor_ws(evaluate(c));
      r.check(f.cascade == c && f.kind == StructureKind::WSReversible,
              [&] { return "trial " + std::to_string(i) + ": " + steps_to_string(c) + " -> " + steps_to_string(f.cascade); });
    } catch (const LiftingError& e) {
      r.check(false, [&] { return "trial " + std::to_string(i) + ": " + e.what(); });
    }
  }
  r.seconds = timer.seconds();
  return r;
}

SuiteResult suite_hs_rescaling(const SelftestConfig&, const Corpus& corpus) {
  Timer timer;
  SuiteResult r = make(3, "HS uniqueness modulo rescaling");
  for (std::size_t i = 0; i < corpus.hs.size(); ++i) {
    const Cascade& c = corpus.hs[i];
    const Rational& alpha = corpus.hs_alpha[i];
    const std::string tag = "trial " + std::to_string(i) + ": ";
    try {
      // A second factorization of the same bank, by explicit gain transfer.
      const Cascade moved = transfer_gain(c, alpha);
      r.check(evaluate(moved) == evaluate(c), [&] { return tag + "gain transfer changed the bank"; });
      const Rational a2 = alpha * alpha;
      bool related = moved.size() == c.size() && moved.gain() == c.gain() / alpha;
      for (std::size_t n = 0; related && n < c.size(); ++n) {
        const auto& s = c.steps()[n];
        const auto& s2 = moved.steps()[n];
        related = s2.m() == s.m() && s2.filter() == (s.m() == 0 ? s.filter() * a2.inverse() : s.filter() * a2);
      }
      r.check(related, [&] { return tag + "steps not related by alpha^-+2"; });

      const FactorResult f = factor_hs(evaluate(moved));
      r.check(f.cascade.size() == c.size(), [&] { return tag + "step count differs"; });
      for (const auto conv : {Normalization::UnitGain, Normalization::B0AtOneEqualsOne}) {
        auto normalize = [&](const Cascade& x) {
          const Rational a =
              conv == Normalization::UnitGain ? x.gain() : scalar_filters(x.base()).h0.eval_at_one();
          return transfer_gain(x, a);
        };
        const Cascade nc = normalize(c);
        const Cascade nm = normalize(moved);
        FactorResult nf = normalize_rescaling(f, conv);
        r.check(nc == nm && nc == nf.cascade, [&] {
          return tag + std::string(to_string(conv)) + ": " + steps_to_string(nc) + " vs " + steps_to_string(nf.cascade);
        });
        r.check(evaluate(nf.cascade) == evaluate(c), [&] { return tag + "normalization changed the bank"; });
      }
    } catch (const LiftingError& e) {
      r.check(false, [&] { return tag + e.what(); });
    }
  }
  r.seconds = timer.seconds();
  return r;
}

SuiteResult suite_radius_traces(const SelftestConfig& cfg, const Corpus& corpus) {
  Timer timer;
  SuiteResult r = make(4, "radius traces");
  auto run = [&](const Cascade& c, StructureKind kind, const std::string& tag) {
    const bool ws = is_ws(kind);
    try {
      RadiusTrace pred = predict_radii(c, kind);
      if (cfg.inject_radius_fault && !pred.stages.empty()) {
        auto& last = pred.stages.back();
        ++last.r0;
        std::tie(last.suppint0, last.suppint1) = expected_suppints(ws, last.r0, last.r1);
      }
      const IntermediateTrace tr = trace(c);
      for (const auto& st : pred.stages) {
        const auto& actual = tr.scalar_stage(st.stage);
        const auto [want0, want1] = expected_suppints(ws, st.r0, st.r1);
        const bool ok = actual.h0.suppint() == st.suppint0 && actual.h1.suppint() == st.suppint1 &&
                        st.suppint0 == want0 && st.suppint1 == want1;
        r.check(ok, [&] {
          return tag + " stage " + std::to_string(st.stage) + ": actual " + actual.h0.suppint().to_string() + ", " +
                 actual.h1.suppint().to_string() + " predicted " + st.suppint0.to_string() + ", " +
                 st.suppint1.to_string();
        });
        const std::int64_t a0 = actual.h0.is_zero() ? -1 : supp_rad(actual.h0);
        const std::int64_t a1 = actual.h1.is_zero() ? -1 : supp_rad(actual.h1);
        const bool opposite = (a0 + a1) % 2 != 0;
        if (ws && st.stage >= 0) {
          r.check(opposite, [&] { return tag + " stage " + std::to_string(st.stage) + ": WS radii share parity"; });
        } else if (!ws) {
          r.check(!opposite, [&] { return tag + " stage " + std::to_string(st.stage) + ": HS radii differ in parity"; });
        }
      }
    } catch (const LiftingError& e) {
      r.check(false, [&] { return tag + ": " + e.what(); });
    }
  };
  for (std::size_t i = 0; i < corpus.ws.size(); ++i) run(corpus.ws[i], StructureKind::WSReversible, "ws " + std::to_string(i));
  for (std::size_t i = 0; i < corpus.hs.size(); ++i) {
    run(corpus.hs[i], StructureKind::HSIrreversible, "hs " + std::to_string(i));
    run(transfer_gain(corpus.hs[i], corpus.hs_alpha[i]), StructureKind::HSIrreversible, "hs' " + std::to_string(i));
  }
  r.seconds = timer.seconds();
  return r;
}

SuiteResult suite_polyphase_formulas(const SelftestConfig& cfg) {
  Timer timer;
  SuiteResult r = make(5, "polyphase support formulas");
  const std::array<PhaseCenter, 3> centers{PhaseCenter::Zero, PhaseCenter::MinusOne, PhaseCenter::MinusHalf};
  for (std::size_t ci = 0; ci < centers.size(); ++ci) {
    for (std::size_t i = 0; i < cfg.filters_per_center; ++i) {
      Rng rng(trial_seed(cfg.seed, kFormulas, ci * 1000003 + i));
      const PhaseCenter pc = centers[ci];
      const std::int64_t radius = rng.uniform(pc == PhaseCenter::MinusHalf ? 1 : 0, 12);
      std::int64_t lo = -radius;
      std::int64_t hi = radius;
      if (pc == PhaseCenter::MinusOne) {
        --lo;
        --hi;
      } else if (pc == PhaseCenter::MinusHalf) {
        --hi;
      }
      const LaurentPoly f = rng.chance(1, 2) ? random_filter(rng, cfg.params, lo, hi)
                                             : random_symmetric(rng, cfg.params, lo + hi, radius);
      const SupportInterval want =
          polyphase_suppint_formula(pc, cfg.inject_radius_fault ? radius + 1 : radius);
      const SupportInterval got = analyze(f).suppint();
      r.check(got == want, [&] {
        return "center " + std::to_string(ci) + " r=" + std::to_string(radius) + ": formula " + want.to_string() +
               ", analyze " + got.to_string();
      });
    }
  }
  r.seconds = timer.seconds();
  return r;
}

SuiteResult suite_order_increase(const SelftestConfig&, const Corpus& corpus) {
  Timer timer;
  SuiteResult r = make(6, "sufficient conditions imply order increase");
  auto run = [&](const Cascade& c, StructureKind kind, const std::string& tag) {
    try {
      const auto rep = check_sufficient_conditions(c, kind);
      r.check(rep.equal_base_suppints && rep.support_covering && rep.report.verdict, [&] {
        return tag + ": " + (rep.report.violations.empty() ? std::string("conditions fail")
                                                           : rep.report.violations.front().rule);
      });
      const IntermediateTrace tr = trace(c);
      bool increasing = true;
      for (std::size_t n = 1; n < tr.matrices.size(); ++n) {
        increasing = increasing && tr.matrices[n].order() > tr.matrices[n - 1].order();
      }
      r.check(increasing && is_order_increasing(c), [&] { return tag + ": order chain not strictly increasing"; });
    } catch (const LiftingError& e) {
      r.check(false, [&] { return tag + ": " + e.what(); });
    }
  };
  for (std::size_t i = 0; i < corpus.ws.size(); ++i) run(corpus.ws[i], StructureKind::WSReversible, "ws " + std::to_string(i));
  for (std::size_t i = 0; i < corpus.hs.size(); ++i) run(corpus.hs[i], StructureKind::HSIrreversible, "hs " + std::to_string(i));
  r.seconds = timer.seconds();
  return r;
}

SuiteResult suite_support_algebra(const SelftestConfig& cfg) {
  Timer timer;
  SuiteResult r = make(7, "support interval algebra");
  for (std::size_t i = 0; i < cfg.support_pairs; ++i) {
    Rng rng(trial_seed(cfg.seed, kAlgebra, i));
    auto draw = [&] {
      const std::int64_t lo = rng.uniform(-10, 10);
      return random_filter(rng, cfg.params, lo, lo + rng.uniform(0, 10));
    };
    const LaurentPoly f = draw();
    const LaurentPoly g = draw();
    const std::string tag = "pair " + std::to_string(i);
    r.check((f * g).suppint() == f.suppint() + g.suppint(), [&] { return tag + ": product support"; });
    const SupportInterval up = lp_upsample(f).suppint();
    r.check(up == SupportInterval(2 * f.lo(), 2 * f.hi()), [&] { return tag + ": upsampled support " + up.to_string(); });
    if (f.hi() - f.lo() >= 2) {
      const std::int64_t a = f.lo() + 1;
      const std::int64_t b = f.hi() - 1;
      const std::int64_t qlo = rng.uniform(a, b);
      const LaurentPoly q = random_filter(rng, cfg.params, qlo, rng.uniform(qlo, b));
      r.check((f + q).suppint() == f.suppint(), [&] { return tag + ": covering rule"; });
    }
  }
  r.seconds = timer.seconds();
  return r;
}

SuiteResult suite_dissimilar_lengths(const SelftestConfig& cfg) {
  Timer timer;
  SuiteResult r = make(8, "least dissimilar lengths");
  // The reference bank factors uniquely and one of its steps is third order,
  // so it has no factorization into first-order HS steps.
  const FactorResult ref = factor_ws(evaluate(reference_ws_cascade()));
  bool has_order3 = false;
  bool all_first = true;
  for (const auto& s : ref.cascade.steps()) {
    has_order3 = has_order3 || order(s.filter()) == 3;
    all_first = all_first && order(s.filter()) == 1;
  }
  r.check(has_order3 && !all_first, [&] { return "reference factorization " + steps_to_string(ref.cascade); });
  const auto ref_filters = scalar_filters(evaluate(ref.cascade));
  r.check(order(ref_filters.h0) - order(ref_filters.h1) == 2 && supp_rad(ref.cascade.steps().back().filter()) == 1,
          [&] { return std::string("reference bank lengths"); });

  for (std::size_t i = 0; i < cfg.dissimilar_trials; ++i) {
    Rng rng(trial_seed(cfg.seed, kDissimilar, i));
    CascadeOptions opt;
    opt.force_final_t1 = i % 2 == 0;
    const Cascade c = random_cascade(rng, cfg.params, StructureKind::WSReversible, opt);
    const auto [h0, h1] = scalar_filters(evaluate(c));
    const std::int64_t gap = order(h0) - order(h1);
    const bool final_t1 = supp_rad(c.steps().back().filter()) == 1;
    r.check(final_t1 == (gap == 2 || gap == -2), [&] {
      return "trial " + std::to_string(i) + ": final t=" + std::to_string(supp_rad(c.steps().back().filter())) +
             " order gap " + std::to_string(gap);
    });
    try {
      const FactorResult f = factor_ws(evaluate(c));
      r.check(f.cascade == c, [&] { return "trial " + std::to_string(i) + ": refactoring differs"; });
    } catch (const LiftingError& e) {
      r.check(false, [&] { return "trial " + std::to_string(i) + ": " + e.what(); });
    }
  }
  r.seconds = timer.seconds();
  return r;
}

SuiteResult suite_det_and_pr(const SelftestConfig& cfg, const Corpus& corpus) {
  Timer timer;
  SuiteResult r = make(9, "determinant and perfect reconstruction");
  GenParams sp = cfg.params;
  sp.dyadic = false;
  std::size_t trial = 0;
  auto run = [&](const Cascade& c, const std::string& tag) {
    const PolyMatrix h = evaluate(c);
    r.check(det(h) == LaurentPoly(Rational(1)), [&] { return tag + ": det = " + to_string(det(h)); });
    Rng rng(trial_seed(cfg.seed, kSignals, trial++));
    Signal x;
    x.start = rng.uniform(-8, 8);
    const std::int64_t len = rng.uniform(1, 64);
    for (std::int64_t k = 0; k < len; ++k) x.samples.push_back(random_rational(rng, sp, false));
    try {
      const Subbands y = apply_analysis(c, x);
      const Subbands ref = direct_analysis(h, x);
      r.check(same_samples(y.low, ref.low) && same_samples(y.high, ref.high),
              [&] { return tag + ": ladder output differs from direct filtering"; });
      const Signal back = apply_synthesis(c, y);
      r.check(same_samples(back, x), [&] { return tag + ": synthesis did not restore the signal"; });
    } catch (const LiftingError& e) {
      r.check(false, [&] { return tag + ": " + e.what(); });
    }
  };
  for (std::size_t i = 0; i < corpus.ws.size(); ++i) run(corpus.ws[i], "ws " + std::to_string(i));
  for (std::size_t i = 0; i < corpus.hs.size(); ++i) run(corpus.hs[i], "hs " + std::to_string(i));
  r.seconds = timer.seconds();
  return r;
}

std::vector<SuiteResult> run_selftest(const SelftestConfig& cfg) {
  const Corpus corpus = build_corpus(cfg);
  return {
      suite_fixture_regression(cfg),     suite_ws_uniqueness(cfg, corpus), suite_hs_rescaling(cfg, corpus),
      suite_radius_traces(cfg, corpus),  suite_polyphase_formulas(cfg),    suite_order_increase(cfg, corpus),
      suite_support_algebra(cfg),        suite_dissimilar_lengths(cfg),    suite_det_and_pr(cfg, corpus),
  };
}

}  // namespace liftforge

// liftforge: evaluate, factor, verify and run lifting cascades from JSON.
#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "liftforge/error.hpp"
#include "liftforge/json_io.hpp"
#include "liftforge/selftest.hpp"

using namespace liftforge;

namespace {

enum Exit : int { kOk = 0, kFailure = 1, kClassViolation = 2, kNotFactorable = 3, kParse = 4 };

int exit_code(ErrorCode code) {
  switch (code) {
    case ErrorCode::ParseError:
      return kParse;
    case ErrorCode::NotFactorable:
      return kNotFactorable;
    case ErrorCode::NotWSClass:
    case ErrorCode::NotHSClass:
    case ErrorCode::NotUnimodular:
    case ErrorCode::NotInStructure:
    case ErrorCode::NotIrreducible:
      return kClassViolation;
    default:
      return kFailure;
  }
}

std::string interval(const SupportInterval& s) { return s.empty() ? "empty" : s.to_string(); }

std::optional<StructureKind> detect_structure(const Cascade& c) {
  if (!is_irreducible(c)) return std::nullopt;
  for (auto k : {StructureKind::WSReversible, StructureKind::WSIrreversible, StructureKind::HSReversible,
                 StructureKind::HSIrreversible}) {
    if (cascade_in_structure(c, k).verdict) return k;
  }
  return std::nullopt;
}

void print_report(std::ostream& os, const MembershipReport& r) {
  os << "verdict: " << (r.verdict ? "pass" : "FAIL") << "\n";
  for (const auto& v : r.violations) {
    os << "  stage " << std::setw(2) << v.stage << "  " << v.rule << ": " << v.detail << "\n";
  }
  for (const auto& n : r.notes) os << "  note: " << n << "\n";
}

void print_cascade(std::ostream& os, const Cascade& c) {
  os << "K = " << c.gain() << "\n";
  for (std::size_t i = 0; i < c.size(); ++i) {
    const auto& s = c.steps()[i];
    os << "S" << i << " (m=" << s.m() << ", " << (s.upper() ? "upper" : "lower") << "): " << s.filter() << "\n";
  }
  os << "base = " << (c.base().is_identity() ? std::string("identity") : to_string(c.base())) << "\n";
}

int cmd_eval(const std::string& file, bool json) {
  const Cascade c = cascade_from_json(load_json_file(file), file);
  const PolyMatrix h = evaluate(c);
  const IntermediateTrace tr = trace(c);
  const auto kind = detect_structure(c);
  std::optional<RadiusTrace> pred;
  if (kind) pred = predict_radii(c, *kind);

  if (json) {
    Json stages = Json::array();
    for (int n = -1; n < static_cast<int>(c.size()); ++n) {
      const auto& sc = tr.scalar_stage(n);
      Json st{{"stage", n},
              {"suppint0", interval(sc.h0.suppint())},
              {"suppint1", interval(sc.h1.suppint())},
              {"order", tr.stage(n).order()}};
      if (pred) {
        const auto& p = pred->stages[static_cast<std::size_t>(n + 1)];
        st["predicted"] = {{"r0", p.r0}, {"r1", p.r1}, {"suppint0", interval(p.suppint0)}, {"suppint1", interval(p.suppint1)}};
      }
      stages.push_back(st);
    }
    Json out{{"bank", to_json(h)}, {"structure", kind ? Json(std::string(to_string(*kind))) : Json(nullptr)},
             {"trace", stages}};
    std::cout << out.dump(2) << "\n";
    return kOk;
  }

  const auto [h0, h1] = scalar_filters(h);
  std::cout << "H0(z) = " << h0 << "\nH1(z) = " << h1 << "\n";
  std::cout << "structure: " << (kind ? std::string(to_string(*kind)) : std::string("none (no radius prediction)"))
            << "\n\n";
  std::cout << std::left << std::setw(7) << "stage" << std::setw(4) << "m" << std::setw(16) << "suppint(E0)"
            << std::setw(16) << "suppint(E1)" << std::setw(7) << "order";
  if (pred) std::cout << std::setw(12) << "pred r0,r1" << std::setw(14) << "actual r0,r1" << "match";
  std::cout << "\n";
  for (int n = -1; n < static_cast<int>(c.size()); ++n) {
    const auto& sc = tr.scalar_stage(n);
    std::cout << std::setw(7) << n << std::setw(4)
              << (n < 0 ? std::string("-") : std::to_string(c.steps()[static_cast<std::size_t>(n)].m()))
              << std::setw(16) << interval(sc.h0.suppint()) << std::setw(16) << interval(sc.h1.suppint())
              << std::setw(7) << tr.stage(n).order();
    if (pred) {
      const auto& p = pred->stages[static_cast<std::size_t>(n + 1)];
      const bool match = p.suppint0 == sc.h0.suppint() && p.suppint1 == sc.h1.suppint();
      std::cout << std::setw(12) << (std::to_string(p.r0) + "," + std::to_string(p.r1)) << std::setw(14)
                << (std::to_string(supp_rad(sc.h0)) + "," + std::to_string(supp_rad(sc.h1)))
                << (match ? "yes" : "NO");
    }
    std::cout << "\n";
  }
  return kOk;
}

int cmd_factor(const std::string& file, const std::string& cls, const std::string& norm, bool json) {
  const PolyMatrix h = bank_from_json(load_json_file(file), file);
  FactorResult r = cls == "ws" ? factor_ws(h) : factor_hs(h);
  // WS results keep the identity base, so there is no gain to transfer.
  std::string applied = "none";
  if (norm != "none" && !is_ws(r.kind)) {
    Normalization conv = default_normalization(r);
    if (norm == "dc") conv = Normalization::B0AtOneEqualsOne;
    if (norm == "unit") conv = Normalization::UnitGain;
    r = normalize_rescaling(r, conv);
    applied = to_string(conv);
  }

  if (json) {
    std::cout << to_json(r, applied).dump(2) << "\n";
    return kOk;
  }
  std::cout << "structure: " << to_string(r.kind) << "\n";
  print_cascade(std::cout, r.cascade);
  std::cout << "normalization: " << applied << "\n";
  std::cout << "irreducible: " << (r.irreducible ? "yes" : "no")
            << ", order-increasing: " << (r.order_increasing ? "yes" : "no") << "\n";
  std::cout << "radii:";
  for (const auto& s : r.radii.stages) std::cout << " (" << s.r0 << "," << s.r1 << ")";
  std::cout << "\n";
  print_report(std::cout, r.membership);
  return kOk;
}

int cmd_verify(const std::string& file, const std::string& structure, bool json) {
  const Cascade c = cascade_from_json(load_json_file(file), file);
  const StructureKind kind = parse_structure_kind(structure);
  MembershipReport report = cascade_in_structure(c, kind);
  const bool member = report.verdict;
  const bool irreducible = is_irreducible(c);
  const SufficientConditionsReport suff = check_sufficient_conditions(c, kind);
  report.merge(suff.report);
  std::optional<bool> increasing;
  if (irreducible) increasing = is_order_increasing(c);
  if (member && irreducible) report.merge(check_radius_trace(c, kind));
  if (increasing && !*increasing && suff.order_chain.empty()) {
    report.add(-1, "order-increase", "cascade is not order-increasing");
  }

  if (json) {
    Json out{{"structure", std::string(to_string(kind))},
             {"member", member},
             {"irreducible", irreducible},
             {"equal_base_suppints", suff.equal_base_suppints},
             {"support_covering", suff.support_covering},
             {"order_increasing", increasing ? Json(*increasing) : Json(nullptr)},
             {"order_chain", suff.order_chain},
             {"report", to_json(report)}};
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "structure: " << to_string(kind) << "\n"
              << "member: " << (member ? "yes" : "no") << "\n"
              << "irreducible: " << (irreducible ? "yes" : "no") << "\n"
              << "equal base suppints: " << (suff.equal_base_suppints ? "yes" : "no") << "\n"
              << "support covering: " << (suff.support_covering ? "yes" : "no") << "\n"
              << "order-increasing: " << (increasing ? (*increasing ? "yes" : "no") : "n/a") << "\n";
    if (!suff.order_chain.empty()) {
      std::cout << "order chain:";
      for (auto o : suff.order_chain) std::cout << " " << o;
      std::cout << "\n";
    }
    print_report(std::cout, report);
  }
  return report.verdict ? kOk : kClassViolation;
}

int cmd_transform(const std::string& cascade_file, const std::string& signal_file, bool inverse) {
  const Cascade c = cascade_from_json(load_json_file(cascade_file), cascade_file);
  const Json input = load_json_file(signal_file);
  if (!inverse) {
    const Signal x = signal_from_json(input, signal_file);
    std::cout << to_json(apply_analysis(c, x), x).dump(2) << "\n";
    return kOk;
  }
  Signal shape;
  const Subbands bands = bands_from_json(input, shape, signal_file);
  const LaurentPoly rec = apply_synthesis(c, bands).to_poly();
  for (std::size_t k = 0; k < shape.samples.size(); ++k) {
    shape.samples[k] = rec.coeff(shape.start + static_cast<std::int64_t>(k));
  }
  std::cout << to_json(shape).dump(2) << "\n";
  return kOk;
}

std::uint64_t resolve_seed(const std::optional<std::uint64_t>& flag) {
  if (flag) return *flag;
  if (const char* env = std::getenv("LIFTING_FORGE_SEED"); env && *env) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw LiftingError(ErrorCode::ParseError, std::string("LIFTING_FORGE_SEED is not an integer: ") + env);
    }
  }
  return kDefaultSeed;
}

int cmd_selftest(const std::optional<std::uint64_t>& seed, std::optional<std::size_t> trials, const std::string& fault,
                 bool json) {
  SelftestConfig cfg;
  cfg.seed = resolve_seed(seed);
  if (trials) {
    cfg.ws_trials = cfg.hs_trials = cfg.dissimilar_trials = *trials;
    cfg.filters_per_center = cfg.support_pairs = 5 * *trials;
  }
  cfg.inject_radius_fault = fault == "radius";
  const auto results = run_selftest(cfg);
  bool ok = true;
  Json suites = Json::array();
  for (const auto& r : results) {
    ok = ok && r.passed();
    if (json) {
      suites.push_back(Json{{"id", r.id},
                            {"name", r.name},
                            {"checks", r.checks},
                            {"failures", r.failures},
                            {"seconds", r.seconds},
                            {"samples", r.failure_samples}});
      continue;
    }
    std::cout << (r.passed() ? "PASS" : "FAIL") << "  [" << r.id << "] " << std::left << std::setw(46) << r.name
              << std::right << std::setw(7) << r.checks << " checks" << std::setw(6) << r.failures << " failed  "
              << std::fixed << std::setprecision(2) << r.seconds << "s\n";
    for (const auto& s : r.failure_samples) std::cout << "        " << s << "\n";
  }
  if (json) {
    std::cout << Json{{"seed", cfg.seed}, {"passed", ok}, {"suites", suites}}.dump(2) << "\n";
  } else {
    std::cout << "seed " << cfg.seed << ": " << (ok ? "all suites passed" : "FAILURES") << "\n";
  }
  return ok ? kOk : kFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact lifting factorization of linear phase filter banks"};
  app.require_subcommand(1);
  bool json = false;
  app.add_flag("--json", json, "Machine-readable JSON output");

  std::string cascade_file;
  std::string bank_file;
  std::string signal_file;
  std::string cls = "ws";
  std::string norm = "auto";
  std::string structure;
  bool inverse = false;
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> trials;
  std::string fault;

  auto* eval = app.add_subcommand("eval", "Evaluate a cascade and print its trace");
  eval->add_option("cascade", cascade_file, "Cascade JSON file")->required();
  eval->add_flag("--json", json);

  auto* factor = app.add_subcommand("factor", "Factor a filter bank into lifting steps");
  factor->add_option("bank", bank_file, "Bank JSON file")->required();
  factor->add_option("--class", cls, "Symmetry class")->check(CLI::IsMember({"ws", "hs"}));
  factor->add_option("--normalize", norm, "Gain normalization convention")
      ->check(CLI::IsMember({"auto", "dc", "unit", "none"}));
  factor->add_flag("--json", json);

  auto* verify = app.add_subcommand("verify", "Check structure membership and order-increase");
  verify->add_option("cascade", cascade_file, "Cascade JSON file")->required();
  verify->add_option("--structure", structure, "ws, wsr, hs or hsr")->required();
  verify->add_flag("--json", json);

  auto* transform = app.add_subcommand("transform", "Run the lifting ladder on a signal");
  transform->add_option("cascade", cascade_file, "Cascade JSON file")->required();
  transform->add_option("signal", signal_file, "Signal (or subband) JSON file")->required();
  transform->add_flag("--inverse", inverse, "Synthesize from subbands");

  auto* selftest = app.add_subcommand("selftest", "Run the randomized property suites");
  selftest->add_option("--seed", seed, "Master seed (default: $LIFTING_FORGE_SEED or 271828)");
  selftest->add_option("--trials", trials, "Trials per randomized suite")->check(CLI::PositiveNumber);
  selftest->add_option("--inject-fault", fault, "Negative control")->check(CLI::IsMember({"radius"}));
  selftest->add_flag("--json", json);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kFailure;
  }

  try {
    if (*eval) return cmd_eval(cascade_file, json);
    if (*factor) return cmd_factor(bank_file, cls, norm, json);
    if (*verify) return cmd_verify(cascade_file, structure, json);
    if (*transform) return cmd_transform(cascade_file, signal_file, inverse);
    if (*selftest) return cmd_selftest(seed, trials, fault, json);
  } catch (const LiftingError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code(e.code());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFailure;
  }
  return kFailure;
}

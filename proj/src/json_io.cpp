#include "liftforge/json_io.hpp"

#include <fstream>
#include <sstream>

#include "liftforge/error.hpp"

namespace liftforge {

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& what) {
  throw LiftingError(ErrorCode::ParseError, path + ": " + what);
}

const Json& field(const Json& j, const char* key, const std::string& path) {
  if (!j.is_object()) fail(path, "expected an object");
  const auto it = j.find(key);
  if (it == j.end()) fail(path, std::string("missing field \"") + key + "\"");
  return *it;
}

std::int64_t int_from_json(const Json& j, const std::string& path) {
  if (!j.is_number_integer()) fail(path, "expected an integer");
  return j.get<std::int64_t>();
}

std::string number_string(const Json& j, const std::string& path) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number_integer()) return std::to_string(j.get<std::int64_t>());
  fail(path, "expected a decimal integer string");
}

// Byte offset to 1-based line and column.
std::pair<std::size_t, std::size_t> line_col(std::string_view text, std::size_t offset) {
  std::size_t line = 1;
  std::size_t col = 1;
  for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

}  // namespace

Json parse_json(std::string_view text, std::string_view source) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    const auto [line, col] = line_col(text, e.byte > 0 ? e.byte - 1 : 0);
    std::string msg = e.what();
    if (const auto pos = msg.find("syntax error"); pos != std::string::npos) msg = msg.substr(pos);
    throw LiftingError(ErrorCode::ParseError, std::string(source) + ":" + std::to_string(line) + ":" +
                                                  std::to_string(col) + ": " + msg);
  }
}

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw LiftingError(ErrorCode::ParseError, path + ": cannot open file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_json(ss.str(), path);
}

Json to_json(const Rational& r) { return Json{{"num", r.num().get_str()}, {"den", r.den().get_str()}}; }

Json to_json(const LaurentPoly& p) {
  Json terms = Json::array();
  for (const auto& t : p.terms()) {
    terms.push_back(Json{{"n", t.n}, {"num", t.coeff.num().get_str()}, {"den", t.coeff.den().get_str()}});
  }
  return Json{{"terms", terms}, {"text", to_string(p)}};
}

Json to_json(const PolyMatrix& m) {
  const auto [h0, h1] = scalar_filters(m);
  Json rows = Json::array();
  for (int i = 0; i < 2; ++i) rows.push_back(Json::array({to_json(m.at(i, 0)), to_json(m.at(i, 1))}));
  return Json{{"h0", to_json(h0)}, {"h1", to_json(h1)}, {"matrix", rows}};
}

Json to_json(const Cascade& c) {
  Json steps = Json::array();
  for (const auto& s : c.steps()) steps.push_back(Json{{"m", s.m()}, {"s", to_json(s.filter())}});
  Json out{{"K", to_json(c.gain())}, {"steps", steps}};
  if (c.base().is_identity()) {
    out["base"] = "identity";
  } else {
    out["base"] = to_json(c.base());
  }
  return out;
}

Json to_json(const Signal& s) {
  Json samples = Json::array();
  for (const auto& v : s.samples) samples.push_back(to_json(v));
  return Json{{"start", s.start}, {"samples", samples}};
}

Json to_json(const Subbands& b, const Signal& source_shape) {
  return Json{{"lowband", to_json(b.low)},
              {"highband", to_json(b.high)},
              {"signal_start", source_shape.start},
              {"signal_length", source_shape.samples.size()}};
}

Json to_json(const MembershipReport& r) {
  Json v = Json::array();
  for (const auto& x : r.violations) v.push_back(Json{{"stage", x.stage}, {"rule", x.rule}, {"detail", x.detail}});
  return Json{{"verdict", r.verdict}, {"violations", v}, {"notes", r.notes}};
}

Json to_json(const RadiusTrace& t) {
  Json stages = Json::array();
  for (const auto& s : t.stages) {
    stages.push_back(Json{{"stage", s.stage},
                          {"m", s.m},
                          {"t", s.t},
                          {"r0", s.r0},
                          {"r1", s.r1},
                          {"suppint0", {s.suppint0.lo(), s.suppint0.hi()}},
                          {"suppint1", {s.suppint1.lo(), s.suppint1.hi()}}});
  }
  return stages;
}

Json to_json(const FactorResult& r, std::string_view normalization) {
  Json out = to_json(r.cascade);
  out["certificate"] = Json{{"structure", std::string(to_string(r.kind))},
                            {"normalization", std::string(normalization)},
                            {"irreducible", r.irreducible},
                            {"order_increasing", r.order_increasing},
                            {"membership", to_json(r.membership)},
                            {"radii", to_json(r.radii)}};
  return out;
}

Rational rational_from_json(const Json& j, const std::string& path) {
  auto guarded = [&](auto&& make) {
    try {
      return make();
    } catch (const LiftingError& e) {
      fail(path, e.what());
    }
  };
  if (j.is_number_integer()) return Rational(mpz_class(std::to_string(j.get<std::int64_t>())), mpz_class(1));
  if (j.is_string()) return guarded([&] { return Rational::parse(j.get<std::string>()); });
  if (j.is_object()) {
    const std::string num = number_string(field(j, "num", path), path + ".num");
    const std::string den = j.contains("den") ? number_string(j.at("den"), path + ".den") : "1";
    return guarded([&] { return Rational::from_strings(num, den); });
  }
  fail(path, "expected a rational as {\"num\", \"den\"}, \"p/q\" or an integer");
}

LaurentPoly poly_from_json(const Json& j, const std::string& path) {
  if (j.is_string()) {
    try {
      return parse_laurent(j.get<std::string>());
    } catch (const LiftingError& e) {
      fail(path, e.what());
    }
  }
  const Json& terms = field(j, "terms", path);
  if (!terms.is_array()) fail(path + ".terms", "expected an array");
  std::vector<LaurentPoly::Term> out;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const std::string p = path + ".terms[" + std::to_string(i) + "]";
    const Json& t = terms[i];
    const std::int64_t n = int_from_json(field(t, "n", p), p + ".n");
    Rational c;
    if (t.contains("c")) {
      c = rational_from_json(t.at("c"), p + ".c");
    } else {
      c = rational_from_json(t, p);
    }
    out.push_back({n, c});
  }
  return LaurentPoly::from_terms(out);
}

PolyMatrix bank_from_json(const Json& j, const std::string& path) {
  if (!j.is_object()) fail(path, "expected a bank object");
  if (j.contains("matrix")) {
    const Json& m = j.at("matrix");
    const std::string p = path + ".matrix";
    if (!m.is_array() || m.size() != 2) fail(p, "expected a 2x2 array");
    PolyMatrix out;
    for (std::size_t i = 0; i < 2; ++i) {
      if (!m[i].is_array() || m[i].size() != 2) fail(p + "[" + std::to_string(i) + "]", "expected 2 entries");
      for (std::size_t k = 0; k < 2; ++k) {
        out.at(static_cast<int>(i), static_cast<int>(k)) =
            poly_from_json(m[i][k], p + "[" + std::to_string(i) + "][" + std::to_string(k) + "]");
      }
    }
    return out;
  }
  return bank_from_scalars(poly_from_json(field(j, "h0", path), path + ".h0"),
                           poly_from_json(field(j, "h1", path), path + ".h1"));
}

Cascade cascade_from_json(const Json& j, const std::string& path) {
  if (!j.is_object()) fail(path, "expected a cascade object");
  const Rational k = j.contains("K") ? rational_from_json(j.at("K"), path + ".K") : Rational(1);
  const Json& steps = field(j, "steps", path);
  if (!steps.is_array()) fail(path + ".steps", "expected an array");
  std::vector<LiftingStep> out;
  for (std::size_t i = 0; i < steps.size(); ++i) {
    const std::string p = path + ".steps[" + std::to_string(i) + "]";
    const std::int64_t m = int_from_json(field(steps[i], "m", p), p + ".m");
    if (m != 0 && m != 1) fail(p + ".m", "update characteristic must be 0 or 1");
    const LaurentPoly s = poly_from_json(field(steps[i], "s", p), p + ".s");
    if (s.is_zero()) fail(p + ".s", "lifting filter is zero");
    out.emplace_back(static_cast<int>(m), s);
  }
  PolyMatrix base = PolyMatrix::identity();
  if (j.contains("base")) {
    const Json& b = j.at("base");
    if (b.is_string()) {
      if (b.get<std::string>() != "identity") fail(path + ".base", "unknown base \"" + b.get<std::string>() + "\"");
    } else {
      base = bank_from_json(b, path + ".base");
    }
  }
  if (k.is_zero()) fail(path + ".K", "gain must be nonzero");
  return Cascade(k, std::move(out), base);
}

Signal signal_from_json(const Json& j, const std::string& path) {
  Signal s;
  s.start = j.contains("start") ? int_from_json(j.at("start"), path + ".start") : 0;
  const Json& samples = field(j, "samples", path);
  if (!samples.is_array()) fail(path + ".samples", "expected an array");
  for (std::size_t i = 0; i < samples.size(); ++i) {
    s.samples.push_back(rational_from_json(samples[i], path + ".samples[" + std::to_string(i) + "]"));
  }
  return s;
}

Subbands bands_from_json(const Json& j, Signal& shape, const std::string& path) {
  Subbands b;
  b.low = signal_from_json(field(j, "lowband", path), path + ".lowband");
  b.high = signal_from_json(field(j, "highband", path), path + ".highband");
  shape.start = int_from_json(field(j, "signal_start", path), path + ".signal_start");
  const std::int64_t len = int_from_json(field(j, "signal_length", path), path + ".signal_length");
  if (len < 0) fail(path + ".signal_length", "must be non-negative");
  shape.samples.assign(static_cast<std::size_t>(len), Rational(0));
  return b;
}

}  // namespace liftforge

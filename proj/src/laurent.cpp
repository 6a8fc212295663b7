#include "liftforge/laurent.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <ostream>
#include <sstream>

#include "liftforge/error.hpp"

namespace liftforge {

// ---------------------------------------------------------------------------
// SupportInterval

SupportInterval::SupportInterval(std::int64_t lo, std::int64_t hi) {
  if (lo > hi) {
    throw LiftingError(ErrorCode::DomainError,
                       "support interval [" + std::to_string(lo) + "," + std::to_string(hi) +
                           "] has lo > hi");
  }
  bounds_ = std::make_pair(lo, hi);
}

std::int64_t SupportInterval::lo() const {
  if (!bounds_) throw LiftingError(ErrorCode::ZeroFilter, "lower end of an empty interval");
  return bounds_->first;
}

std::int64_t SupportInterval::hi() const {
  if (!bounds_) throw LiftingError(ErrorCode::ZeroFilter, "upper end of an empty interval");
  return bounds_->second;
}

SupportInterval SupportInterval::join(const SupportInterval& other) const {
  if (empty()) return other;
  if (other.empty()) return *this;
  return {std::min(lo(), other.lo()), std::max(hi(), other.hi())};
}

SupportInterval SupportInterval::operator+(const SupportInterval& other) const {
  if (empty() || other.empty()) return {};
  return {lo() + other.lo(), hi() + other.hi()};
}

SupportInterval SupportInterval::scaled(std::int64_t factor) const {
  if (empty()) return {};
  const auto a = lo() * factor;
  const auto b = hi() * factor;
  return {std::min(a, b), std::max(a, b)};
}

bool SupportInterval::contains(const SupportInterval& inner) const {
  if (inner.empty()) return true;
  if (empty()) return false;
  return lo() <= inner.lo() && inner.hi() <= hi();
}

std::string SupportInterval::to_string() const {
  if (empty()) return "Empty";
  return "[" + std::to_string(lo()) + "," + std::to_string(hi()) + "]";
}

std::ostream& operator<<(std::ostream& os, const SupportInterval& s) { return os << s.to_string(); }

std::string SymmetryClass::to_string() const {
  std::string name;
  switch (kind) {
    case Kind::WS: name = "WS"; break;
    case Kind::HS: name = "HS"; break;
    case Kind::WA: name = "WA"; break;
    case Kind::HA: name = "HA"; break;
    case Kind::None: return "None";
  }
  const std::string c = (center2 % 2 == 0) ? std::to_string(center2 / 2)
                                           : std::to_string(center2) + "/2";
  return name + "(" + c + ")";
}

// ---------------------------------------------------------------------------
// LaurentPoly

LaurentPoly::LaurentPoly(const Rational& constant) {
  if (!constant.is_zero()) coeffs_.push_back(constant);
}

LaurentPoly LaurentPoly::monomial(std::int64_t n, const Rational& c) {
  LaurentPoly p;
  if (!c.is_zero()) {
    p.lo_ = n;
    p.coeffs_.push_back(c);
  }
  return p;
}

LaurentPoly LaurentPoly::z_pow(std::int64_t power, const Rational& c) { return monomial(-power, c); }

LaurentPoly LaurentPoly::from_terms(const std::vector<Term>& terms) {
  std::map<std::int64_t, Rational> acc;
  for (const auto& t : terms) acc[t.n] += t.coeff;
  std::erase_if(acc, [](const auto& kv) { return kv.second.is_zero(); });
  if (acc.empty()) return {};
  const auto lo = acc.begin()->first;
  const auto hi = acc.rbegin()->first;
  std::vector<Rational> dense(static_cast<std::size_t>(hi - lo + 1));
  for (const auto& [n, c] : acc) dense[static_cast<std::size_t>(n - lo)] = c;
  return from_dense(lo, std::move(dense));
}

LaurentPoly LaurentPoly::from_dense(std::int64_t start, std::vector<Rational> coeffs) {
  LaurentPoly p;
  p.lo_ = start;
  p.coeffs_ = std::move(coeffs);
  p.canonicalize();
  return p;
}

void LaurentPoly::canonicalize() {
  auto first = std::find_if(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return !c.is_zero(); });
  if (first == coeffs_.end()) {
    coeffs_.clear();
    lo_ = 0;
    return;
  }
  while (coeffs_.back().is_zero()) coeffs_.pop_back();
  const auto skip = std::distance(coeffs_.begin(), first);
  if (skip > 0) {
    coeffs_.erase(coeffs_.begin(), first);
    lo_ += skip;
  }
}

Rational LaurentPoly::coeff(std::int64_t n) const {
  if (coeffs_.empty() || n < lo_ || n > hi()) return Rational();
  return coeffs_[static_cast<std::size_t>(n - lo_)];
}

std::vector<LaurentPoly::Term> LaurentPoly::terms() const {
  std::vector<Term> out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (!coeffs_[i].is_zero()) out.push_back({lo_ + static_cast<std::int64_t>(i), coeffs_[i]});
  }
  return out;
}

std::size_t LaurentPoly::term_count() const {
  return static_cast<std::size_t>(
      std::count_if(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return !c.is_zero(); }));
}

SupportInterval LaurentPoly::suppint() const {
  if (is_zero()) return {};
  return {lo_, hi()};
}

std::int64_t LaurentPoly::lo() const {
  if (is_zero()) throw LiftingError(ErrorCode::ZeroFilter, "support of the zero polynomial");
  return lo_;
}

std::int64_t LaurentPoly::hi() const {
  if (is_zero()) throw LiftingError(ErrorCode::ZeroFilter, "support of the zero polynomial");
  return lo_ + static_cast<std::int64_t>(coeffs_.size()) - 1;
}

Rational LaurentPoly::eval_at_one() const {
  Rational sum;
  for (const auto& c : coeffs_) sum += c;
  return sum;
}

bool LaurentPoly::is_dyadic() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c.is_dyadic(); });
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly p = *this;
  for (auto& c : p.coeffs_) c = -c;
  return p;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  const auto lo = std::min(lo_, o.lo_);
  const auto hi = std::max(this->hi(), o.hi());
  std::vector<Rational> sum(static_cast<std::size_t>(hi - lo + 1));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) sum[static_cast<std::size_t>(lo_ - lo) + i] = coeffs_[i];
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) sum[static_cast<std::size_t>(o.lo_ - lo) + i] += o.coeffs_[i];
  lo_ = lo;
  coeffs_ = std::move(sum);
  canonicalize();
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) { return *this += -o; }

LaurentPoly& LaurentPoly::operator*=(const Rational& c) {
  if (c.is_zero()) return *this = LaurentPoly();
  for (auto& x : coeffs_) x *= c;
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> prod(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      if (!b.coeffs_[j].is_zero()) prod[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return LaurentPoly::from_dense(a.lo_ + b.lo_, std::move(prod));
}

// ---------------------------------------------------------------------------
// Free functions

LaurentPoly lp_add(const LaurentPoly& p, const LaurentPoly& q) { return p + q; }
LaurentPoly lp_mul(const LaurentPoly& p, const LaurentPoly& q) { return p * q; }

LaurentPoly lp_upsample(const LaurentPoly& p) {
  if (p.is_zero()) return {};
  std::vector<Rational> dense(2 * p.dense().size() - 1);
  for (std::size_t i = 0; i < p.dense().size(); ++i) dense[2 * i] = p.dense()[i];
  return LaurentPoly::from_dense(2 * p.lo(), std::move(dense));
}

LaurentPoly lp_reflect(const LaurentPoly& p) {
  if (p.is_zero()) return {};
  std::vector<Rational> dense(p.dense().rbegin(), p.dense().rend());
  return LaurentPoly::from_dense(-p.hi(), std::move(dense));
}

LaurentPoly lp_delay(const LaurentPoly& p, std::int64_t k) {
  if (p.is_zero()) return {};
  return LaurentPoly::from_dense(p.lo() + k, p.dense());
}

SupportInterval suppint(const LaurentPoly& p) { return p.suppint(); }

std::int64_t order(const LaurentPoly& p) {
  if (p.is_zero()) throw LiftingError(ErrorCode::ZeroFilter, "order of the zero polynomial");
  return p.hi() - p.lo();
}

std::int64_t supp_rad(const LaurentPoly& p) {
  if (p.is_zero()) throw LiftingError(ErrorCode::ZeroFilter, "support radius of the zero polynomial");
  const auto len = p.hi() - p.lo() + 1;
  return len / 2;  // len > 0, so truncation is floor
}

SupportInterval join(const SupportInterval& i, const SupportInterval& j) { return i.join(j); }

SymmetryClass classify_symmetry(const LaurentPoly& p) {
  if (p.is_zero()) throw LiftingError(ErrorCode::ZeroFilter, "symmetry of the zero polynomial");
  const auto& c = p.dense();
  const std::size_t len = c.size();
  bool sym = true;
  bool anti = true;
  for (std::size_t i = 0; i < len && (sym || anti); ++i) {
    const auto& mirror = c[len - 1 - i];
    if (!(c[i] == mirror)) sym = false;
    if (!(c[i] == -mirror)) anti = false;
  }
  SymmetryClass out;
  out.center2 = p.lo() + p.hi();
  const bool whole = out.center2 % 2 == 0;
  if (sym) {
    out.kind = whole ? SymmetryClass::Kind::WS : SymmetryClass::Kind::HS;
  } else if (anti) {
    out.kind = whole ? SymmetryClass::Kind::WA : SymmetryClass::Kind::HA;
  } else {
    out.kind = SymmetryClass::Kind::None;
  }
  return out;
}

bool is_dyadic(const LaurentPoly& p) { return p.is_dyadic(); }

// ---------------------------------------------------------------------------
// Text form

std::string to_string(const LaurentPoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : p.terms()) {
    const std::int64_t power = -t.n;
    Rational mag = t.coeff.abs();
    if (first) {
      if (t.coeff.sign() < 0) os << '-';
    } else {
      os << (t.coeff.sign() < 0 ? " - " : " + ");
    }
    first = false;
    const bool unit = mag == Rational(1);
    if (power == 0) {
      os << mag;
      continue;
    }
    if (!unit) {
      os << mag;
      if (!mag.is_integer()) os << ' ';
    }
    os << 'z';
    if (power != 1) os << '^' << power;
  }
  return os.str();
}

LaurentPoly parse_laurent(std::string_view text) {
  std::vector<LaurentPoly::Term> terms;
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  auto fail = [&](const std::string& why) {
    throw LiftingError(ErrorCode::ParseError,
                       "polynomial '" + std::string(text) + "' at offset " + std::to_string(i) + ": " + why);
  };
  auto read_digits = [&] {
    const auto start = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    return std::string(text.substr(start, i - start));
  };

  skip_ws();
  if (i < text.size() && text.substr(i) == "0") return {};
  bool first = true;
  while (true) {
    skip_ws();
    if (i >= text.size()) {
      if (first) fail("empty expression");
      break;
    }
    int sign = 1;
    if (text[i] == '+' || text[i] == '-') {
      sign = text[i] == '-' ? -1 : 1;
      ++i;
      skip_ws();
    } else if (!first) {
      fail("expected '+' or '-'");
    }
    first = false;

    Rational coeff(1);
    bool have_coeff = false;
    if (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      std::string num = read_digits();
      std::string den = "1";
      if (i < text.size() && text[i] == '/') {
        ++i;
        den = read_digits();
        if (den.empty()) fail("missing denominator");
      }
      coeff = Rational::from_strings(num, den);
      have_coeff = true;
      skip_ws();
      if (i < text.size() && text[i] == '*') {
        ++i;
        skip_ws();
      }
    }
    std::int64_t power = 0;
    if (i < text.size() && text[i] == 'z') {
      ++i;
      power = 1;
      skip_ws();
      if (i < text.size() && text[i] == '^') {
        ++i;
        skip_ws();
        int esign = 1;
        if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
          esign = text[i] == '-' ? -1 : 1;
          ++i;
        }
        const auto digits = read_digits();
        if (digits.empty()) fail("missing exponent");
        power = esign * std::stoll(digits);
      }
    } else if (!have_coeff) {
      fail("expected coefficient or 'z'");
    }
    terms.push_back({-power, sign < 0 ? -coeff : coeff});
  }
  return LaurentPoly::from_terms(terms);
}

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p) { return os << to_string(p); }

}  // namespace liftforge

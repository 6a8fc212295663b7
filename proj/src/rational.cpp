#include "liftforge/rational.hpp"

#include <cctype>
#include <ostream>

#include "liftforge/error.hpp"

namespace liftforge {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::ZeroFilter: return "ZeroFilter";
    case ErrorCode::ZeroScale: return "ZeroScale";
    case ErrorCode::DomainError: return "DomainError";
    case ErrorCode::NotIrreducible: return "NotIrreducible";
    case ErrorCode::NotInStructure: return "NotInStructure";
    case ErrorCode::NotUnimodular: return "NotUnimodular";
    case ErrorCode::NotWSClass: return "NotWSClass";
    case ErrorCode::NotHSClass: return "NotHSClass";
    case ErrorCode::NotFactorable: return "NotFactorable";
    case ErrorCode::DCZero: return "DCZero";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

namespace {

mpz_class parse_integer(std::string_view text) {
  std::size_t i = 0;
  if (!text.empty() && (text[0] == '-' || text[0] == '+')) i = 1;
  if (i == text.size()) {
    throw LiftingError(ErrorCode::ParseError, "empty integer '" + std::string(text) + "'");
  }
  for (std::size_t k = i; k < text.size(); ++k) {
    if (!std::isdigit(static_cast<unsigned char>(text[k]))) {
      throw LiftingError(ErrorCode::ParseError,
                         "invalid decimal integer '" + std::string(text) + "'");
    }
  }
  std::string digits(text.substr(text[0] == '+' ? 1 : 0));
  return mpz_class(digits, 10);
}

}  // namespace

Rational::Rational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

Rational::Rational(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw LiftingError(ErrorCode::DomainError, "zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rational Rational::from_strings(std::string_view num, std::string_view den) {
  return Rational(parse_integer(num), parse_integer(den));
}

Rational Rational::parse(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text), mpz_class(1));
  return from_strings(text.substr(0, slash), text.substr(slash + 1));
}

bool Rational::is_dyadic() const { return mpz_popcount(q_.get_den_mpz_t()) == 1; }

Rational Rational::inverse() const {
  if (is_zero()) throw LiftingError(ErrorCode::DomainError, "inverse of zero");
  return Rational(mpq_class(1 / q_));
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw LiftingError(ErrorCode::DomainError, "division by zero");
  q_ /= o.q_;
  return *this;
}

std::string Rational::to_string() const { return q_.get_str(10); }

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

}  // namespace liftforge

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace liftforge {

enum class ErrorCode {
  ZeroFilter,
  ZeroScale,
  DomainError,
  NotIrreducible,
  NotInStructure,
  NotUnimodular,
  NotWSClass,
  NotHSClass,
  NotFactorable,
  DCZero,
  ParseError,
};

std::string_view to_string(ErrorCode code);

/// Every failure raised by the library carries one of the codes above.
class LiftingError : public std::runtime_error {
 public:
  LiftingError(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace liftforge

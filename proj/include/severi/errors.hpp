#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace severi {

enum class ErrorCode {
  InvalidInput,
  ParseError,
  NotPrime,
  NotIrreducible,
  NotGalois,
  WrongOrder,
  InternalDescentFailure,
  SearchExhausted,
  ZeroInput,
  FieldMismatch,
  Singular,
  ShapeMismatch,
  MixedDegrees,
  ZeroPoint,
  DegreeTooSmall,
  ZeroA,
  AllAttemptsSingular,
  NotHonestCocycle,
  NotMonomialCocycle,
  NotAWitness,
  NotGaloisStable,
  LengthMismatch,
  TooLarge,
  VerificationFailed,
};

std::string_view error_name(ErrorCode code);

// Every failure surfaced by the library carries one of the codes above; the
// CLI maps them onto exit statuses.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_name(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace severi

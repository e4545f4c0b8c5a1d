#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace cherednik {

enum class ErrorCode {
  NotPrime,
  CharacteristicDividesM,
  ZeroDenominator,
  DenominatorVanishesAtSpecialization,
  MixedFields,
  InhomogeneousGenerator,
  InvalidParameters,
  MalformedTableau,
  NotAPartition,
  ExpressionFailure,
  UnknownName,
  IncompatibleGroup,
  DimensionMismatch,
  NotGStable,
  ModularCharacteristic,
  NonHomogeneous,
  DivisionFailure,
  CapTooSmall,
  LengthMismatch,
  OutOfRegime,
  UnsupportedCase,
  CongruenceViolated,
  IncompleteTable,
  SizeMismatch,
  SolveFailure,
  ParseError,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Every failure raised by the library carries a machine-readable code.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) { throw Error(code, message); }

inline void require(bool condition, ErrorCode code, const std::string& message) {
  if (!condition) fail(code, message);
}

}  // namespace cherednik

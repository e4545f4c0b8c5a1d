#include "cherednik/error.hpp"

namespace cherednik {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::NotPrime: return "NotPrime";
    case ErrorCode::CharacteristicDividesM: return "CharacteristicDividesM";
    case ErrorCode::ZeroDenominator: return "ZeroDenominator";
    case ErrorCode::DenominatorVanishesAtSpecialization: return "DenominatorVanishesAtSpecialization";
    case ErrorCode::MixedFields: return "MixedFields";
    case ErrorCode::InhomogeneousGenerator: return "InhomogeneousGenerator";
    case ErrorCode::InvalidParameters: return "InvalidParameters";
    case ErrorCode::MalformedTableau: return "MalformedTableau";
    case ErrorCode::NotAPartition: return "NotAPartition";
    case ErrorCode::ExpressionFailure: return "ExpressionFailure";
    case ErrorCode::UnknownName: return "UnknownName";
    case ErrorCode::IncompatibleGroup: return "IncompatibleGroup";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::NotGStable: return "NotGStable";
    case ErrorCode::ModularCharacteristic: return "ModularCharacteristic";
    case ErrorCode::NonHomogeneous: return "NonHomogeneous";
    case ErrorCode::DivisionFailure: return "DivisionFailure";
    case ErrorCode::CapTooSmall: return "CapTooSmall";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::OutOfRegime: return "OutOfRegime";
    case ErrorCode::UnsupportedCase: return "UnsupportedCase";
    case ErrorCode::CongruenceViolated: return "CongruenceViolated";
    case ErrorCode::IncompleteTable: return "IncompleteTable";
    case ErrorCode::SizeMismatch: return "SizeMismatch";
    case ErrorCode::SolveFailure: return "SolveFailure";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace cherednik

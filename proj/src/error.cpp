#include "superdet/error.hpp"

namespace superdet {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotLatinSquare: return "NotLatinSquare";
    case ErrorCode::NotAssociative: return "NotAssociative";
    case ErrorCode::NoIdentity: return "NoIdentity";
    case ErrorCode::InvalidCycleNotation: return "InvalidCycleNotation";
    case ErrorCode::GroupTooLarge: return "GroupTooLarge";
    case ErrorCode::NotAPartition: return "NotAPartition";
    case ErrorCode::DimTooLargeForSymbolic: return "DimTooLargeForSymbolic";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::EigensplitFailed: return "EigensplitFailed";
    case ErrorCode::OrthogonalityViolation: return "OrthogonalityViolation";
    case ErrorCode::PartNotInvariant: return "PartNotInvariant";
    case ErrorCode::BlocksInconsistent: return "BlocksInconsistent";
    case ErrorCode::FormulaMismatch: return "FormulaMismatch";
    case ErrorCode::CheckerDisagreement: return "CheckerDisagreement";
    case ErrorCode::DegenerateFactors: return "DegenerateFactors";
    case ErrorCode::IdentityFails: return "IdentityFails";
    case ErrorCode::MultiplicityNotIntegral: return "MultiplicityNotIntegral";
    case ErrorCode::DegreeMismatch: return "DegreeMismatch";
    case ErrorCode::NotClosed: return "NotClosed";
    case ErrorCode::CapExceeded: return "CapExceeded";
    case ErrorCode::InvalidInput: return "InvalidInput";
  }
  return "Unknown";
}

}  // namespace superdet

#include "qtutte/error.hpp"

namespace qtutte {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kNotAPrimePower: return "NotAPrimePower";
    case ErrorCode::kUnsupportedOrder: return "UnsupportedOrder";
    case ErrorCode::kDimensionMismatch: return "DimensionMismatch";
    case ErrorCode::kBudgetExceeded: return "BudgetExceeded";
    case ErrorCode::kInvalidId: return "InvalidId";
    case ErrorCode::kNotComparable: return "NotComparable";
    case ErrorCode::kNotACover: return "NotACover";
    case ErrorCode::kNotADiamond: return "NotADiamond";
    case ErrorCode::kAxiomViolation: return "AxiomViolation";
    case ErrorCode::kDiamondViolation: return "DiamondViolation";
    case ErrorCode::kRankOutOfRange: return "RankOutOfRange";
    case ErrorCode::kCharacterizationMismatch: return "CharacterizationMismatch";
    case ErrorCode::kNotAnAtom: return "NotAnAtom";
    case ErrorCode::kLatticeMismatch: return "LatticeMismatch";
    case ErrorCode::kShiftOutOfRange: return "ShiftOutOfRange";
    case ErrorCode::kNoPartition: return "NoPartition";
    case ErrorCode::kInvalidPartition: return "InvalidPartition";
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kOverflow: return "Overflow";
  }
  return "Unknown";
}

}  // namespace qtutte

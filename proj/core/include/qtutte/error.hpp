#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace qtutte {

enum class ErrorCode {
  kNotAPrimePower,
  kUnsupportedOrder,
  kDimensionMismatch,
  kBudgetExceeded,
  kInvalidId,
  kNotComparable,
  kNotACover,
  kNotADiamond,
  kAxiomViolation,
  kDiamondViolation,
  kRankOutOfRange,
  kCharacterizationMismatch,
  kNotAnAtom,
  kLatticeMismatch,
  kShiftOutOfRange,
  kNoPartition,
  kInvalidPartition,
  kParseError,
  kOverflow,
};

std::string_view error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// Raised by the rank-function validator. `axiom` is one of "R1", "R2", "R3"
// or "unit-increment"; `witness` holds the flat ids that break it.
class AxiomViolation : public Error {
 public:
  AxiomViolation(std::string axiom, std::vector<std::uint32_t> witness,
                 const std::string& message)
      : Error(ErrorCode::kAxiomViolation, message),
        axiom_(std::move(axiom)),
        witness_(std::move(witness)) {}

  const std::string& axiom() const noexcept { return axiom_; }
  const std::vector<std::uint32_t>& witness() const noexcept {
    return witness_;
  }

 private:
  std::string axiom_;
  std::vector<std::uint32_t> witness_;
};

// Color census of a height-2 interval that matches none of the four
// admissible diamond types.
struct DiamondCensus {
  std::uint32_t bottom = 0;
  std::uint32_t top = 0;
  int lower_red = 0;
  int lower_green = 0;
  int upper_red = 0;
  int upper_green = 0;
};

class DiamondViolation : public Error {
 public:
  DiamondViolation(DiamondCensus census, const std::string& message)
      : Error(ErrorCode::kDiamondViolation, message), census_(census) {}

  const DiamondCensus& census() const noexcept { return census_; }

 private:
  DiamondCensus census_;
};

class BudgetExceeded : public Error {
 public:
  BudgetExceeded(std::uint64_t projected, std::uint64_t limit,
                 const std::string& what)
      : Error(ErrorCode::kBudgetExceeded,
              what + ": projected " + std::to_string(projected) +
                  " exceeds budget " + std::to_string(limit)),
        projected_(projected),
        limit_(limit) {}

  std::uint64_t projected() const noexcept { return projected_; }
  std::uint64_t limit() const noexcept { return limit_; }

 private:
  std::uint64_t projected_;
  std::uint64_t limit_;
};

}  // namespace qtutte

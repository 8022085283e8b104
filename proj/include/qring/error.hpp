#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace qring {

enum class Errc {
  NotPermutation,
  NotIdempotent,
  NotRightDistributive,
  InvalidParams,
  NotHomomorphism,
  NotSurjective,
  CoveringConditionFails,
  SearchBudgetExceeded,
  BudgetExceeded,
  CompositeModulus,
  RingMismatch,
  CarrierMismatch,
  ConstraintViolated,
  AssertionFailed,
  NotIdempotentInput,
  NotNilpotent,
  HypothesisFailed,
  IndexOutOfRange,
  ParseError,
};

constexpr std::string_view errc_name(Errc c) {
  switch (c) {
    case Errc::NotPermutation: return "NotPermutation";
    case Errc::NotIdempotent: return "NotIdempotent";
    case Errc::NotRightDistributive: return "NotRightDistributive";
    case Errc::InvalidParams: return "InvalidParams";
    case Errc::NotHomomorphism: return "NotHomomorphism";
    case Errc::NotSurjective: return "NotSurjective";
    case Errc::CoveringConditionFails: return "CoveringConditionFails";
    case Errc::SearchBudgetExceeded: return "SearchBudgetExceeded";
    case Errc::BudgetExceeded: return "BudgetExceeded";
    case Errc::CompositeModulus: return "CompositeModulus";
    case Errc::RingMismatch: return "RingMismatch";
    case Errc::CarrierMismatch: return "CarrierMismatch";
    case Errc::ConstraintViolated: return "ConstraintViolated";
    case Errc::AssertionFailed: return "AssertionFailed";
    case Errc::NotIdempotentInput: return "NotIdempotentInput";
    case Errc::NotNilpotent: return "NotNilpotent";
    case Errc::HypothesisFailed: return "HypothesisFailed";
    case Errc::IndexOutOfRange: return "IndexOutOfRange";
    case Errc::ParseError: return "ParseError";
  }
  return "Unknown";
}

/// Domain error carrying a machine-readable code and the indices that
/// pinpoint the violation (column, element, triple, ...).
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message, std::vector<std::size_t> where = {})
      : std::runtime_error(std::string(errc_name(code)) + ": " + message),
        code_(code),
        where_(std::move(where)) {}

  Errc code() const noexcept { return code_; }
  const std::vector<std::size_t>& where() const noexcept { return where_; }

  bool is_budget() const noexcept {
    return code_ == Errc::BudgetExceeded || code_ == Errc::SearchBudgetExceeded;
  }

 private:
  Errc code_;
  std::vector<std::size_t> where_;
};

[[noreturn]] inline void fail(Errc code, const std::string& message,
                              std::vector<std::size_t> where = {}) {
  throw Error(code, message, std::move(where));
}

}  // namespace qring

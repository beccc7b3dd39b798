#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace wtenum {

// Bad arguments from the caller (not a prime, wrong parameter shape, ...).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// An identity that must hold by construction did not. Always a bug or a
// counterexample worth reporting.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// A computation was refused because its a priori cost exceeds the budget.
class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(const std::string& what, std::uint64_t estimate, std::uint64_t budget)
      : std::runtime_error(what + " (estimate " + std::to_string(estimate) +
                           ", budget " + std::to_string(budget) + ")"),
        estimate_(estimate),
        budget_(budget) {}

  std::uint64_t estimate() const { return estimate_; }
  std::uint64_t budget() const { return budget_; }

 private:
  std::uint64_t estimate_;
  std::uint64_t budget_;
};

}  // namespace wtenum

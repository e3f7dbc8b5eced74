#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace stdist {

// Invalid user input: unknown family, rank outside its range, q not a prime power, ...
class InvalidArgumentError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// An enumeration or construction would exceed its configured resource budget.
class BudgetExceededError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Growth enumeration ran out of budget; carries the coefficients computed so far.
class GrowthBudgetError : public BudgetExceededError {
 public:
  GrowthBudgetError(const std::string& what, std::vector<std::uint64_t> partial)
      : BudgetExceededError(what), partial_(std::move(partial)) {}

  const std::vector<std::uint64_t>& partial_coefficients() const { return partial_; }

 private:
  std::vector<std::uint64_t> partial_;
};

// A mathematical consistency check failed inside the model. Never expected.
class ModelError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace stdist

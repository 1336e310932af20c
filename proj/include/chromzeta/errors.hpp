#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace chromzeta {

// Default cap on exhaustive enumerations (colorings, residue tuples, boxes).
inline constexpr std::uint64_t kDefaultEnumerationBudget = 100'000'000;

/// Input that violates a documented precondition. The CLI maps it to exit code 2.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Requested work exceeds a configured budget. The CLI maps it to exit code 3.
class BudgetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An internal consistency check failed. The CLI maps it to exit code 4.
class InvariantError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace chromzeta

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace patineq {

/// Feasibility caps for exhaustive work. Exceeding one is a refusal, never a
/// silent truncation.
struct Budgets {
  /// Largest number of patterns an extremal search may visit.
  std::uint64_t max_enumeration = 1'000'000;
  /// Largest ambient length n for enumeration over all of S_n.
  int max_ambient_n = 9;
  /// Largest k^n for enumeration over all words of [k]^n.
  std::uint64_t max_word_space = 10'000'000;
  /// Threads used by searches and exhaustive enumerations; 0 means 1.
  unsigned workers = 1;
};

class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(std::string budget, std::string detail)
      : std::runtime_error("budget " + budget + " exceeded: " + detail),
        budget_(std::move(budget)) {}

  const std::string& budget() const noexcept { return budget_; }

 private:
  std::string budget_;
};

}  // namespace patineq

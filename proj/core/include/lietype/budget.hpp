#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace lietype {

// Caps on exhaustive enumeration.  Everything that sweeps a group, a flag
// variety, or a closure takes a budget parameter; exceeding it raises
// BudgetExceeded instead of starting an open-ended computation.
inline constexpr std::uint64_t kDefaultElementBudget = 2'000'000;
inline constexpr std::uint64_t kDefaultFlagBudget = 100'000;

class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(const std::string& what, std::uint64_t required,
                 std::uint64_t budget)
      : std::runtime_error(what + ": needs " + std::to_string(required) +
                           " items, budget is " + std::to_string(budget)),
        required_(required),
        budget_(budget) {}

  std::uint64_t required() const { return required_; }
  std::uint64_t budget() const { return budget_; }

 private:
  std::uint64_t required_;
  std::uint64_t budget_;
};

}  // namespace lietype

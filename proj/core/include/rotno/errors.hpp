#pragma once

#include <stdexcept>
#include <string>

namespace rotno {

// Bad input: malformed fractions, invalid lifts, violated preconditions.
class ValidationError : public std::runtime_error {
public:
  explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

// A configured resource bound was hit (iteration count, denominator size,
// assignment cap).  The message names the bound that was exceeded.
class BudgetError : public std::runtime_error {
public:
  enum class Kind { denominator, iterations, assignments };

  BudgetError(Kind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  Kind kind() const { return kind_; }

private:
  Kind kind_;
};

}  // namespace rotno

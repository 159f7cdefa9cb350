#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cascadia {

/// A caller-supplied value is outside the documented domain.
class InvalidParameter : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A combination of otherwise valid inputs cannot be used together
/// (e.g. a single-player node function with two players).
class InvalidConfiguration : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A contested seed node whose contenders all have product score 0.
class UndefinedDistribution : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A seed set larger than the player's budget.
class BudgetViolation : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Internal precondition broken by the caller (e.g. evaluating an
/// already-influenced node).
class ContractViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace cascadia

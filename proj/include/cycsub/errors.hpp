#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace cycsub {

// Input violates an operation's documented precondition (bad parameters,
// hypothesis of a constructive builder not met, malformed graph6, ...).
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// An exponential search hit its configured budget. Carries whatever bounds
// were known when the search stopped; -1 means "no bound available".
class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(const std::string& what, std::int64_t lower = -1,
                 std::int64_t upper = -1)
      : std::runtime_error(what), lower_(lower), upper_(upper) {}

  std::int64_t lower_bound() const { return lower_; }
  std::int64_t upper_bound() const { return upper_; }

 private:
  std::int64_t lower_;
  std::int64_t upper_;
};

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A constructive procedure could not complete on an input that passed its
// hypothesis checks. Should not happen in-regime; reported with context.
class ConstructionFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace cycsub

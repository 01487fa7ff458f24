#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace clift {

// Base class for everything this library throws on bad input.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A caller-supplied value failed a documented precondition.  The CLI maps
// these to exit code 2.
struct InputError : Error {
  using Error::Error;
};

// An exact division that a construction relies on does not come out even.
// Mutation of a seed whose variables do not satisfy the exchange relations
// surfaces as this; verification drivers catch it and record a violation.
struct NotDivisibleError : Error {
  using Error::Error;
};

// Execution policy for the embarrassingly parallel verification loops.
// Parallel uses OpenMP when compiled in and must produce results identical
// to Serial; drivers fall back to the serial path otherwise.
enum class Exec { Serial, Parallel };

// One failed check.  Verification drivers collect these instead of
// throwing, so a run always reports every problem it found.
struct Violation {
  std::string kind;   // machine tag: "not_divisible", "frozen_denominator", ...
  int walk = -1;      // 1-based walk number, -1 when not walk-scoped
  int step = -1;      // 1-based step within the walk
  int k = -1;         // 1-based mutation / column position
  std::string detail;
};

struct Report {
  std::vector<Violation> violations;
  long long checks = 0;  // individual assertions evaluated
  bool ok() const { return violations.empty(); }
  void merge(const Report& o) {
    violations.insert(violations.end(), o.violations.begin(), o.violations.end());
    checks += o.checks;
  }
};

}  // namespace clift

#pragma once

#include <stdexcept>
#include <string>

namespace crystal_sieve {

enum class Errc {
  ParseError,
  InvalidArgument,
  InvalidRank,
  DimensionMismatch,
  NotARoot,
  ShapeTooLong,
  SizeMismatch,
  NotDominant,
  NotMonic,
  InexactDivision,
  ConditionViolated,
  HypothesisViolated,
  NotDivisible,
  NotSemistandard,
  NotPrime,
  PTooSmall,
  NonIntegerB,
  ResourceLimit,
  // Internal consistency failures. These indicate a bug, never bad input.
  InternalNegativeExponent,
  InternalNull,
  CongruenceMismatch,
  NonInteger,
};

const char* to_string(Errc code);

// Process exit code for the command-line frontend:
// 2 parse/input, 3 condition violated, 4 resource limit, 5 internal assertion.
int exit_code(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what);
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace crystal_sieve

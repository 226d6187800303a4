#include "crystal_sieve/errors.hpp"

namespace crystal_sieve {

const char* to_string(Errc code) {
  switch (code) {
    case Errc::ParseError: return "ParseError";
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::InvalidRank: return "InvalidRank";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::NotARoot: return "NotARoot";
    case Errc::ShapeTooLong: return "ShapeTooLong";
    case Errc::SizeMismatch: return "SizeMismatch";
    case Errc::NotDominant: return "NotDominant";
    case Errc::NotMonic: return "NotMonic";
    case Errc::InexactDivision: return "InexactDivision";
    case Errc::ConditionViolated: return "ConditionViolated";
    case Errc::HypothesisViolated: return "HypothesisViolated";
    case Errc::NotDivisible: return "NotDivisible";
    case Errc::NotSemistandard: return "NotSemistandard";
    case Errc::NotPrime: return "NotPrime";
    case Errc::PTooSmall: return "PTooSmall";
    case Errc::NonIntegerB: return "NonIntegerB";
    case Errc::ResourceLimit: return "ResourceLimit";
    case Errc::InternalNegativeExponent: return "InternalNegativeExponent";
    case Errc::InternalNull: return "InternalNull";
    case Errc::CongruenceMismatch: return "CongruenceMismatch";
    case Errc::NonInteger: return "NonInteger";
  }
  return "Unknown";
}

int exit_code(Errc code) {
  switch (code) {
    case Errc::ConditionViolated:
    case Errc::HypothesisViolated:
    case Errc::NotDominant:
    case Errc::NotDivisible:
    case Errc::NotSemistandard:
      return 3;
    case Errc::ResourceLimit:
      return 4;
    case Errc::InternalNegativeExponent:
    case Errc::InternalNull:
    case Errc::CongruenceMismatch:
    case Errc::NonInteger:
    case Errc::NonIntegerB:
    case Errc::InexactDivision:
      return 5;
    default:
      return 2;
  }
}

Error::Error(Errc code, const std::string& what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

}  // namespace crystal_sieve

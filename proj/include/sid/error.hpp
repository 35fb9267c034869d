#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace sid {

enum class Errc {
  NegativeProbability,
  SumNotOne,
  ArityMismatch,
  InvalidAlphabet,
  EmptySample,
  UnknownVariable,
  EmptyKeepSet,
  ZeroProbabilityEvidence,
  NotAPartition,
  OverlappingSets,
  NotThreeVariables,
  RedundancyOutOfRange,
  SynergyInconsistent,
  InconsistentZeros,
  ZeroDenominator,
  TargetInSources,
  SymmetryViolation,
  NotApplicable,
  InvalidCaseNumber,
  UnknownFixture,
  ParseError,
  IoError,
};

std::string_view to_string(Errc code) noexcept;

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace sid

#pragma once

#include <string>
#include <vector>

#include "quatcoh/metric.hpp"
#include "quatcoh/session.hpp"

namespace quatcoh {

enum class CheckStatus { Pass, Fail, NotApplicable };

std::string status_name(CheckStatus s);

struct CheckResult {
  std::string name;
  std::string statement;
  CheckStatus status = CheckStatus::Pass;
  std::string witness;  // failure witness, or the measured values for a skipped check
};

struct SuiteReport {
  std::vector<CheckResult> checks;

  std::size_t failures() const;
  bool ok() const { return failures() == 0; }
};

/// Every structural identity the engine knows about, evaluated on one
/// algebra. Failures are returned as data, never thrown.
SuiteReport run_property_suite(const Session& s, const SearchBounds& bounds);

}  // namespace quatcoh

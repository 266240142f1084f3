#pragma once

#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "harness/golden.hpp"

namespace piapprox::harness {

struct CheckResult {
  std::string name;
  bool passed;
  std::string detail;
};

struct InvariantCheck {
  std::string_view name;
  std::function<CheckResult()> run;
};

/// Runtime property checks that need no golden numbers.
const std::vector<InvariantCheck>& invariant_checks();
/// Throws Error(kInvalidArgument) for unknown names.
CheckResult run_invariant_check(std::string_view name);

struct SelftestReport {
  std::vector<CheckResult> checks;
  std::vector<TableAudit> audits;

  bool passed() const noexcept;
};

SelftestReport run_selftest(unsigned threads = 0);
/// Check lines, then the discrepancy report, then an overall verdict.
std::string render_selftest(const SelftestReport& report);

}  // namespace piapprox::harness

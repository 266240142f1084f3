#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "harness/metrics.hpp"
#include "harness/schedule.hpp"
#include "methods/approximants.hpp"

namespace piapprox::harness {

using methods::MethodId;

struct RunRecord {
  MethodId method;
  std::uint64_t n;
  BigFixed value;          // at ctx scale
  std::string value_text;  // rounded half-even to working_dp
  BigFixed signed_err_pct;
  BigFixed abs_err_pct;
  int digits_correct;
  std::chrono::nanoseconds elapsed;  // since the generator was created
};

/// Threads used when the caller passes 0: PIAPPROX_THREADS, else hardware concurrency.
unsigned default_thread_count();

/// One generator advanced through the schedule. Throws Error(kInvalidArgument)
/// if the schedule starts below the method's first index.
std::vector<RunRecord> run(MethodId method, const Schedule& schedule, const PrecisionCtx& ctx,
                           const ReferencePi& ref);

/// One run per method, executed on up to `threads` workers. Output order follows `methods`.
std::vector<std::vector<RunRecord>> run_many(const std::vector<MethodId>& methods, const Schedule& schedule,
                                             const PrecisionCtx& ctx, const ReferencePi& ref, unsigned threads = 0);

/// Parses "1e-3,1e-8" style lists. Throws Error(kParse) on bad numbers and
/// Error(kInvalidArgument) unless strictly decreasing and positive.
std::vector<BigFixed> parse_thresholds(std::string_view text);

struct CrossoverReport {
  std::vector<BigFixed> thresholds;  // abs-err percentages, strictly decreasing
  std::uint64_t budget;              // largest n scanned
  std::vector<MethodId> methods;
  // first_n[m][t]: smallest n with abs_err < thresholds[t], or nullopt if not reached.
  std::vector<std::vector<std::optional<std::uint64_t>>> first_n;
};

struct CompareResult {
  std::vector<MethodId> methods;
  std::vector<std::vector<RunRecord>> runs;  // runs[m] aligned with the schedule
  CrossoverReport crossover;
};

/// Paired run of >= 2 methods plus, for each threshold, the first n (scanning
/// every index up to the schedule's last point) at which each method drops below it.
CompareResult compare(const std::vector<MethodId>& methods, const Schedule& schedule, const PrecisionCtx& ctx,
                      const ReferencePi& ref, const std::vector<BigFixed>& thresholds, unsigned threads = 0);

struct TimeToDigits {
  std::uint64_t n;
  std::chrono::nanoseconds elapsed;
};

/// First n with digits_correct >= target, scanning n up to `step_budget`.
/// Throws Error(kInvalidArgument) if target exceeds ctx.working_dp().
std::optional<TimeToDigits> time_to_digits(MethodId method, int target_digits, const PrecisionCtx& ctx,
                                           const ReferencePi& ref, std::uint64_t step_budget);

struct ComparePreset {
  std::string_view name;
  MethodId first;
  MethodId second;
  std::string_view schedule;
  std::string_view thresholds;
};

const std::vector<ComparePreset>& compare_presets();
/// Throws Error(kInvalidArgument) for unknown names.
const ComparePreset& compare_preset(std::string_view name);

}  // namespace piapprox::harness

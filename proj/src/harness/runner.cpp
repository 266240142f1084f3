#include "harness/runner.hpp"

#include <cstdlib>
#include <string>
#include <thread>

#include "common/error.hpp"
#include "harness/parallel.hpp"

namespace piapprox::harness {

namespace {

using Clock = std::chrono::steady_clock;

struct Scan {
  std::vector<RunRecord> records;
  std::vector<std::optional<std::uint64_t>> first_n;
};

void check_start(MethodId method, const Schedule& schedule) {
  if (schedule.front() < methods::first_index(method)) {
    fail(ErrorCode::kInvalidArgument, std::string(methods::method_name(method)) + " requires n >= " +
                                          std::to_string(methods::first_index(method)) + ", schedule starts at " +
                                          std::to_string(schedule.front()));
  }
}

// Single incremental pass. With thresholds, every index up to the last
// schedule point is evaluated; without, only the sampled ones.
Scan scan(MethodId method, const Schedule& schedule, const PrecisionCtx& ctx, const ReferencePi& ref,
          const std::vector<BigFixed>& thresholds) {
  check_start(method, schedule);
  Scan out;
  out.records.reserve(schedule.size());
  out.first_n.assign(thresholds.size(), std::nullopt);
  std::size_t reached = 0;

  const auto start = Clock::now();
  methods::Approximant gen(method, ctx);
  auto next_sample = schedule.begin();
  const std::uint64_t first = methods::first_index(method);

  auto check_thresholds = [&](std::uint64_t n, const BigFixed& abs_err) {
    while (reached < thresholds.size() && abs_err < thresholds[reached]) out.first_n[reached++] = n;
  };

  if (thresholds.empty()) {
    for (std::uint64_t n : schedule) {
      gen.advance_to(n);
      BigFixed value = gen.value();
      auto err = pct_error(value, ref, ctx);
      const int digits = digits_correct(value, ref);
      std::string text = hiprec::fx_to_string(value, ctx.working_dp());
      out.records.push_back({method, n, std::move(value), std::move(text), std::move(err.signed_pct),
                             std::move(err.abs_pct), digits,
                             std::chrono::duration_cast<std::chrono::nanoseconds>(Clock::now() - start)});
    }
    return out;
  }

  gen.advance_to(first);
  for (std::uint64_t n = first; n <= schedule.back(); ++n) {
    if (n > first) gen.step();
    const bool sampled = next_sample != schedule.end() && *next_sample == n;
    if (!sampled && reached == thresholds.size()) continue;
    BigFixed value = gen.value();
    auto err = pct_error(value, ref, ctx);
    check_thresholds(n, err.abs_pct);
    if (sampled) {
      const int digits = digits_correct(value, ref);
      std::string text = hiprec::fx_to_string(value, ctx.working_dp());
      out.records.push_back({method, n, std::move(value), std::move(text), std::move(err.signed_pct),
                             std::move(err.abs_pct), digits,
                             std::chrono::duration_cast<std::chrono::nanoseconds>(Clock::now() - start)});
      ++next_sample;
    }
  }
  return out;
}

}  // namespace

unsigned default_thread_count() {
  if (const char* env = std::getenv("PIAPPROX_THREADS")) {
    char* end = nullptr;
    const unsigned long value = std::strtoul(env, &end, 10);
    if (end != env && *end == '\0' && value > 0 && value <= 1024) return static_cast<unsigned>(value);
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

std::vector<RunRecord> run(MethodId method, const Schedule& schedule, const PrecisionCtx& ctx,
                           const ReferencePi& ref) {
  return scan(method, schedule, ctx, ref, {}).records;
}

std::vector<std::vector<RunRecord>> run_many(const std::vector<MethodId>& methods, const Schedule& schedule,
                                             const PrecisionCtx& ctx, const ReferencePi& ref, unsigned threads) {
  for (MethodId m : methods) check_start(m, schedule);
  std::vector<std::vector<RunRecord>> out(methods.size());
  parallel_for(methods.size(), threads == 0 ? default_thread_count() : threads,
               [&](std::size_t i) { out[i] = run(methods[i], schedule, ctx, ref); });
  return out;
}

std::vector<BigFixed> parse_thresholds(std::string_view text) {
  std::vector<BigFixed> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string_view::npos) comma = text.size();
    out.push_back(BigFixed::parse(text.substr(pos, comma - pos)));
    pos = comma + 1;
  }
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (out[i].sign() <= 0) fail(ErrorCode::kInvalidArgument, "thresholds must be positive");
    if (i > 0 && !(out[i] < out[i - 1])) fail(ErrorCode::kInvalidArgument, "thresholds must be strictly decreasing");
  }
  return out;
}

CompareResult compare(const std::vector<MethodId>& methods, const Schedule& schedule, const PrecisionCtx& ctx,
                      const ReferencePi& ref, const std::vector<BigFixed>& thresholds, unsigned threads) {
  if (methods.size() < 2) fail(ErrorCode::kInvalidArgument, "compare needs at least two methods");
  for (std::size_t i = 1; i < thresholds.size(); ++i) {
    if (!(thresholds[i] < thresholds[i - 1])) {
      fail(ErrorCode::kInvalidArgument, "thresholds must be strictly decreasing");
    }
  }
  for (MethodId m : methods) check_start(m, schedule);

  std::vector<Scan> scans(methods.size());
  parallel_for(methods.size(), threads == 0 ? default_thread_count() : threads,
               [&](std::size_t i) { scans[i] = scan(methods[i], schedule, ctx, ref, thresholds); });

  CompareResult result;
  result.methods = methods;
  result.crossover.thresholds = thresholds;
  result.crossover.budget = schedule.back();
  result.crossover.methods = methods;
  for (auto& s : scans) {
    result.runs.push_back(std::move(s.records));
    result.crossover.first_n.push_back(std::move(s.first_n));
  }
  return result;
}

std::optional<TimeToDigits> time_to_digits(MethodId method, int target_digits, const PrecisionCtx& ctx,
                                           const ReferencePi& ref, std::uint64_t step_budget) {
  if (target_digits > ctx.working_dp()) {
    fail(ErrorCode::kInvalidArgument, "target digits " + std::to_string(target_digits) + " exceed working_dp " +
                                          std::to_string(ctx.working_dp()));
  }
  const auto start = Clock::now();
  methods::Approximant gen(method, ctx);
  const std::uint64_t first = methods::first_index(method);
  gen.advance_to(first);
  for (std::uint64_t n = first; n <= step_budget; ++n) {
    if (n > first) gen.step();
    if (digits_correct(gen.value(), ref) >= target_digits) {
      return TimeToDigits{n, std::chrono::duration_cast<std::chrono::nanoseconds>(Clock::now() - start)};
    }
  }
  return std::nullopt;
}

const std::vector<ComparePreset>& compare_presets() {
  static const std::vector<ComparePreset> presets = {
      {"leibniz-newton", MethodId::kLeibniz, MethodId::kNewtonArcsine, "0:30:1", "1,1e-3,1e-8,1e-13"},
      {"viete-eulercf", MethodId::kViete, MethodId::kEulerCF, "1:25:1", "1.5,1e-3,1e-8"},
      {"wallis-newton", MethodId::kWallis, MethodId::kNewtonArcsine, "5:100:5", "1,1e-1,1e-3"},
      {"wallis-zeta2", MethodId::kWallis, MethodId::kZeta2, "5:100:5", "1,1e-1"},
      {"newton-zeta8", MethodId::kNewtonArcsine, MethodId::kZeta8, "1:25:1", "1e-3,1e-8,1e-13"},
  };
  return presets;
}

const ComparePreset& compare_preset(std::string_view name) {
  for (const auto& p : compare_presets()) {
    if (p.name == name) return p;
  }
  fail(ErrorCode::kInvalidArgument, "unknown comparison preset '" + std::string(name) + "'");
}

}  // namespace piapprox::harness

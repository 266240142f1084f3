#include "harness/selftest.hpp"

#include <random>

#include "common/error.hpp"
#include "harness/parallel.hpp"
#include "harness/table_presets.hpp"

namespace piapprox::harness {

namespace {

using hiprec::BigInt;
using hiprec::fx_to_string;
using methods::Approximant;

// Collects the first failure of a check.
class Checker {
 public:
  explicit Checker(std::string_view name) : name_(name) {}

  bool expect(bool ok, const std::string& what) {
    if (!ok && passed_) {
      passed_ = false;
      detail_ = what;
    }
    return ok;
  }
  void note(std::string detail) {
    if (passed_) detail_ = std::move(detail);
  }
  CheckResult result() const { return {std::string(name_), passed_, detail_}; }

 private:
  std::string_view name_;
  bool passed_ = true;
  std::string detail_;
};

std::string mname(MethodId m) { return std::string(methods::method_name(m)); }

BigFixed ulp(int scale) { return BigFixed(BigInt(1), scale); }

CheckResult check_reference() {
  Checker c("reference-pi");
  const auto r15 = reference_pi(PrecisionCtx(15, 0));
  c.expect(fx_to_string(r15.value, 15) == kPiPrefix15, "15 dp reference is " + fx_to_string(r15.value, 15));

  const PrecisionCtx ctx20(20, 10);
  const auto r20 = reference_pi(ctx20);
  const auto r20_wide = reference_pi(ctx20.with_guard(30));
  c.expect(hiprec::fx_truncate(r20.value, 22).identical(hiprec::fx_truncate(r20_wide.value, 22)),
           "20 dp reference not stationary at 22 digits");
  const BigFixed zeta8 = methods::approximant(MethodId::kZeta8, 200, ctx20);
  const BigFixed gap = hiprec::fx_sub(r20.value, zeta8, ctx20).abs();
  c.expect(gap < BigFixed::parse("1e-16"), "zeta8(200) differs from reference by " + fx_to_string(gap));

  try {
    reference_pi(PrecisionCtx(15, 0), "2.9");
    c.expect(false, "literal 2.9 accepted");
  } catch (const Error& e) {
    c.expect(e.code() == ErrorCode::kReferenceIntegrity, "literal 2.9 raised the wrong error");
  }
  c.note("15 dp " + fx_to_string(r15.value, 15) + "; zeta8(200) gap " + fx_to_string(gap, 22));
  return c.result();
}

CheckResult check_roots() {
  Checker c("root-ulp-bounds");
  std::mt19937_64 rng(20240611);
  std::uniform_int_distribution<int> digit(0, 9);
  std::uniform_int_distribution<int> length(1, 45);
  std::uniform_int_distribution<int> scale(0, 30);
  std::uniform_int_distribution<int> ctx_scale(1, 40);
  std::uniform_int_distribution<unsigned> degree(3, 8);
  for (int i = 0; i < 1000; ++i) {
    std::string digits;
    const int len = length(rng);
    for (int d = 0; d < len; ++d) digits.push_back(static_cast<char>('0' + digit(rng)));
    const BigFixed x(BigInt::parse(digits), scale(rng));
    const PrecisionCtx ctx(ctx_scale(rng), 0);
    const PrecisionCtx exact(2 * ctx.scale() + x.scale() + 2, 0);
    const PrecisionCtx exact_n(8 * ctx.scale() + x.scale() + 2, 0);

    const BigFixed r = hiprec::fx_sqrt(x, ctx);
    const BigFixed up = hiprec::fx_add(r, ulp(ctx.scale()), ctx);
    c.expect(!r.is_negative() && hiprec::fx_mul(r, r, exact) <= x && hiprec::fx_mul(up, up, exact) > x,
             "sqrt(" + fx_to_string(x) + ") = " + fx_to_string(r) + " is not the floor");

    const unsigned k = degree(rng);
    const BigFixed q = hiprec::fx_nth_root(x, k, ctx);
    const BigFixed q_up = hiprec::fx_add(q, ulp(ctx.scale()), ctx);
    c.expect(hiprec::fx_pow_int(q, k, exact_n) <= x && hiprec::fx_pow_int(q_up, k, exact_n) > x,
             std::to_string(k) + "-th root of " + fx_to_string(x) + " = " + fx_to_string(q) + " is not the floor");
  }
  c.note("1000 random inputs");
  return c.result();
}

CheckResult check_newton_terms() {
  Checker c("newton-term-recurrence");
  const PrecisionCtx ctx(15, 12);
  Approximant gen(MethodId::kNewtonArcsine, ctx);
  BigInt fact_k(1);
  BigInt fact_2k(1);
  for (std::uint64_t k = 0; k <= 10; ++k) {
    if (k > 0) {
      gen.step();
      fact_k *= BigInt::from_u64(k);
      fact_2k *= BigInt::from_u64(2 * k - 1) * BigInt::from_u64(2 * k);
    }
    // t_k = (2k)! / ((k!)^2 4^k (2k+1) 2^(2k+1))
    const BigInt den = fact_k * fact_k * BigInt(4).pow(static_cast<unsigned>(k)) * BigInt::from_u64(2 * k + 1) *
                       BigInt(2).pow(static_cast<unsigned>(2 * k + 1));
    const BigFixed closed = hiprec::fx_from_ratio(fact_2k, den, ctx);
    const BigFixed gap = hiprec::fx_sub(gen.newton_term(), closed, ctx).abs();
    c.expect(gap <= BigFixed(BigInt::from_u64(k + 1), ctx.scale()),
             "t_" + std::to_string(k) + " off by " + fx_to_string(gap));
  }
  c.note("t_0..t_10 within k+1 ulp of the factorial form");
  return c.result();
}

CheckResult check_monotone() {
  Checker c("monotone-from-below");
  const PrecisionCtx ctx(15, 13);
  const auto ref = reference_pi(ctx);
  const BigFixed ceiling = hiprec::fx_round(ref.value, ctx.working_dp());
  const std::pair<MethodId, std::uint64_t> cases[] = {
      {MethodId::kWallis, 200}, {MethodId::kNewtonArcsine, 60}, {MethodId::kViete, 60}, {MethodId::kZeta2, 200},
      {MethodId::kZeta4, 200},  {MethodId::kZeta6, 200},        {MethodId::kZeta8, 200},
  };
  for (const auto& [method, last] : cases) {
    Approximant gen(method, ctx);
    gen.advance_to(1);
    BigFixed prev = gen.value();
    for (std::uint64_t n = 2; n <= last; ++n) {
      gen.step();
      BigFixed cur = gen.value();
      c.expect(prev <= cur, mname(method) + " decreases at n=" + std::to_string(n));
      c.expect(hiprec::fx_round(cur, ctx.working_dp()) <= ceiling, mname(method) + " exceeds pi at n=" + std::to_string(n));
      prev = std::move(cur);
    }
  }
  c.note("wallis/zeta to n=200, newton/viete to n=60");
  return c.result();
}

CheckResult check_leibniz_alternation() {
  Checker c("leibniz-alternation");
  const PrecisionCtx ctx(15, 13);
  const auto ref = reference_pi(ctx);
  Approximant gen(MethodId::kLeibniz, ctx);
  for (std::uint64_t n = 0; n <= 200; ++n) {
    gen.advance_to(n);
    const int sign = pct_error(gen.value(), ref, ctx).signed_pct.sign();
    // Even partial sums overshoot pi (negative signed error), odd ones undershoot.
    c.expect(sign == (n % 2 == 0 ? -1 : 1), "sign " + std::to_string(sign) + " at n=" + std::to_string(n));
  }
  c.note("n = 0..200");
  return c.result();
}

CheckResult check_wallis_rate() {
  Checker c("wallis-rate");
  const PrecisionCtx ctx(15, 13);
  const auto ref = reference_pi(ctx);
  const BigFixed lo = BigFixed::parse("0.24");
  const BigFixed hi = BigFixed::parse("0.26");
  Approximant gen(MethodId::kWallis, ctx);
  for (std::uint64_t n = 50; n <= 500; ++n) {
    gen.advance_to(n);
    const BigFixed rel = hiprec::fx_mul_ratio(pct_error(gen.value(), ref, ctx).abs_pct, n, 100, ctx);
    c.expect(lo <= rel && rel <= hi, "n*rel_err = " + fx_to_string(rel, 6) + " at n=" + std::to_string(n));
  }
  c.note("n*rel_err in [0.24, 0.26] for n = 50..500");
  return c.result();
}

CheckResult check_viete_ratio() {
  Checker c("viete-ratio");
  const PrecisionCtx ctx(15, 13);
  const auto ref = reference_pi(ctx);
  const BigFixed lo = BigFixed::parse("3.8");
  const BigFixed hi = BigFixed::parse("4.2");
  Approximant gen(MethodId::kViete, ctx);
  gen.advance_to(1);
  BigFixed prev = pct_error(gen.value(), ref, ctx).abs_pct;
  for (std::uint64_t n = 1; n <= 20; ++n) {
    gen.step();
    BigFixed cur = pct_error(gen.value(), ref, ctx).abs_pct;
    const BigFixed ratio = hiprec::fx_div(prev, cur, ctx);
    c.expect(lo <= ratio && ratio <= hi, "err ratio " + fx_to_string(ratio, 4) + " at n=" + std::to_string(n));
    prev = std::move(cur);
  }
  c.note("err(n)/err(n+1) in [3.8, 4.2] for n = 1..20");
  return c.result();
}

CheckResult check_euler_leibniz() {
  Checker c("eulercf-equals-leibniz");
  const PrecisionCtx ctx(15, 12);
  Approximant cf(MethodId::kEulerCF, ctx);
  Approximant series(MethodId::kLeibniz, ctx);
  // Exact partial sum 4 * sum (-1)^k / (2k+1) as num/den.
  BigInt num(4);
  BigInt den(1);
  for (std::uint64_t d = 1; d <= 100; ++d) {
    cf.step();
    series.step();
    // The series rounds once per term, so compare at the reported precision.
    const BigFixed gap = hiprec::fx_sub(cf.value(), series.value(), ctx).abs();
    c.expect(gap <= ulp(ctx.working_dp()), "depth " + std::to_string(d) + " differs by " + fx_to_string(gap));
    if (d <= 20) {
      const BigInt odd = BigInt::from_u64(2 * d + 1);
      num = num * odd + (d % 2 == 0 ? BigInt(4) : BigInt(-4)) * den;
      den *= odd;
      const auto [p, q] = cf.convergent();
      c.expect(p * den == num * q, "depth " + std::to_string(d) + " convergent is not the partial sum");
    }
  }
  c.note("within 1e-15 for d = 1..100, exact for d <= 20");
  return c.result();
}

CheckResult check_newton_digits() {
  Checker c("newton-digits");
  const PrecisionCtx ctx(15, 13);
  const auto ref = reference_pi(ctx);
  Approximant gen(MethodId::kNewtonArcsine, ctx);
  for (std::uint64_t n = 25; n <= 200; ++n) {
    gen.advance_to(n);
    const int digits = digits_correct(gen.value(), ref);
    c.expect(digits >= 15, std::to_string(digits) + " digits at n=" + std::to_string(n));
  }
  c.note(">= 15 digits for n = 25..200");
  return c.result();
}

CheckResult check_determinism() {
  Checker c("determinism");
  const PrecisionCtx ctx(15, 12);
  for (MethodId m : methods::kAllMethods) {
    Approximant gen(m, ctx);
    for (std::uint64_t n : {1, 2, 7, 20, 33}) {
      gen.advance_to(n);
      const BigFixed direct = methods::approximant(m, n, ctx);
      c.expect(direct.identical(gen.value()), mname(m) + " direct != resumed at n=" + std::to_string(n));
    }
  }
  const auto ref = reference_pi(ctx);
  const auto sched = Schedule::parse("1:20:1");
  const auto a = run(MethodId::kViete, sched, ctx, ref);
  const auto b = run(MethodId::kViete, sched, ctx, ref);
  for (std::size_t i = 0; i < a.size(); ++i) {
    c.expect(a[i].value_text == b[i].value_text && a[i].signed_err_pct.identical(b[i].signed_err_pct),
             "repeat run differs at n=" + std::to_string(a[i].n));
  }
  c.note("direct == resumed for all methods; repeated runs identical");
  return c.result();
}

CheckResult check_guard_sufficiency() {
  Checker c("guard-sufficiency");
  for (MethodId m : methods::kAllMethods) {
    const bool zeta = methods::zeta_params(m).has_value();
    const int dp = zeta ? 14 : 15;
    const Schedule sched = Schedule::parse(zeta ? "5:100:5" : "1:40:1,60,100");
    const PrecisionCtx base(dp, hiprec::default_guard_dp(sched.back()));
    const PrecisionCtx wide = base.with_guard(base.guard_dp() + 10);
    const auto a = run(m, sched, base, reference_pi(base));
    const auto b = run(m, sched, wide, reference_pi(wide));
    for (std::size_t i = 0; i < a.size(); ++i) {
      c.expect(a[i].value_text == b[i].value_text,
               mname(m) + " n=" + std::to_string(a[i].n) + ": " + a[i].value_text + " vs " + b[i].value_text);
    }
  }
  c.note("default guard and guard+10 print identical values");
  return c.result();
}

CheckResult check_zeta_ordering() {
  Checker c("zeta-error-ordering");
  const TablePreset preset = table_preset(7);
  const PrecisionCtx ctx = preset.ctx();
  const auto ref = reference_pi(ctx);
  std::vector<std::vector<RunRecord>> runs;
  for (MethodId m : preset.methods) runs.push_back(run(m, preset.schedule, ctx, ref));
  for (std::size_t i = 0; i < preset.schedule.size(); ++i) {
    for (std::size_t m = 1; m < runs.size(); ++m) {
      c.expect(runs[m - 1][i].abs_err_pct > runs[m][i].abs_err_pct,
               mname(preset.methods[m - 1]) + " <= " + mname(preset.methods[m]) + " at n=" +
                   std::to_string(runs[m][i].n));
    }
  }
  c.note("err(zeta2) > err(zeta4) > err(zeta6) > err(zeta8) at n = 5..100");
  return c.result();
}

CheckResult check_crossover() {
  Checker c("crossover-monotone");
  const PrecisionCtx ctx(15, 12);
  const auto ref = reference_pi(ctx);
  const auto& preset = compare_preset("leibniz-newton");
  const auto result = compare({preset.first, preset.second}, Schedule::parse(preset.schedule), ctx, ref,
                              parse_thresholds(preset.thresholds), 1);
  for (std::size_t m = 0; m < result.crossover.methods.size(); ++m) {
    const auto& ns = result.crossover.first_n[m];
    for (std::size_t t = 1; t < ns.size(); ++t) {
      const bool ok = !ns[t] || (ns[t - 1] && *ns[t - 1] <= *ns[t]);
      c.expect(ok, mname(result.crossover.methods[m]) + " crossover decreases at threshold " + std::to_string(t));
    }
  }
  c.note("crossover n non-decreasing as thresholds tighten");
  return c.result();
}

}  // namespace

const std::vector<InvariantCheck>& invariant_checks() {
  static const std::vector<InvariantCheck> checks = {
      {"reference-pi", check_reference},
      {"root-ulp-bounds", check_roots},
      {"newton-term-recurrence", check_newton_terms},
      {"monotone-from-below", check_monotone},
      {"leibniz-alternation", check_leibniz_alternation},
      {"wallis-rate", check_wallis_rate},
      {"viete-ratio", check_viete_ratio},
      {"eulercf-equals-leibniz", check_euler_leibniz},
      {"newton-digits", check_newton_digits},
      {"determinism", check_determinism},
      {"guard-sufficiency", check_guard_sufficiency},
      {"zeta-error-ordering", check_zeta_ordering},
      {"crossover-monotone", check_crossover},
  };
  return checks;
}

CheckResult run_invariant_check(std::string_view name) {
  for (const auto& check : invariant_checks()) {
    if (check.name == name) return check.run();
  }
  fail(ErrorCode::kInvalidArgument, "unknown check '" + std::string(name) + "'");
}

bool SelftestReport::passed() const noexcept {
  for (const auto& c : checks) {
    if (!c.passed) return false;
  }
  for (const auto& a : audits) {
    if (!a.passed()) return false;
  }
  return true;
}

SelftestReport run_selftest(unsigned threads) {
  const unsigned workers = threads == 0 ? default_thread_count() : threads;
  SelftestReport report;
  const auto& checks = invariant_checks();
  report.checks.resize(checks.size());
  parallel_for(checks.size(), workers, [&](std::size_t i) {
    try {
      report.checks[i] = checks[i].run();
    } catch (const std::exception& e) {
      report.checks[i] = {std::string(checks[i].name), false, std::string("threw: ") + e.what()};
    }
  });
  report.audits = audit_all_tables(workers);
  return report;
}

std::string render_selftest(const SelftestReport& report) {
  std::string out = "== invariants ==\n";
  for (const auto& c : report.checks) {
    out += (c.passed ? "PASS " : "FAIL ") + c.name;
    if (!c.detail.empty()) out += ": " + c.detail;
    out += "\n";
  }
  out += "\n== golden tables ==\n";
  out += render_audit(report.audits);
  out += "\nselftest: ";
  out += report.passed() ? "PASS" : "FAIL";
  out += "\n";
  return out;
}

}  // namespace piapprox::harness

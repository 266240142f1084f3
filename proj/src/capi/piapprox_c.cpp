#include "piapprox/piapprox.h"

#include <chrono>
#include <cstdlib>
#include <cstring>
#include <memory>
#include <new>
#include <optional>
#include <string>
#include <vector>

#include "common/error.hpp"
#include "harness/table_presets.hpp"
#include "harness/runner.hpp"
#include "harness/selftest.hpp"
#include "report/report.hpp"

using piapprox::Error;
using piapprox::ErrorCode;
using piapprox::hiprec::BigFixed;
using piapprox::hiprec::PrecisionCtx;
using piapprox::methods::MethodId;

struct pa_context {
  PrecisionCtx ctx;
};
struct pa_number {
  BigFixed value;
};
struct pa_generator {
  piapprox::methods::Approximant gen;
};
struct pa_reference {
  piapprox::harness::ReferencePi ref;
};
struct pa_schedule {
  piapprox::harness::Schedule schedule;
};

struct pa_run {
  struct Text {
    std::string value, signed_err, abs_err;
  };
  std::vector<piapprox::harness::RunRecord> records;
  std::vector<Text> text;
  piapprox::report::TableSpec spec;
  std::optional<piapprox::harness::CrossoverReport> crossover;

  void cache_text() {
    text.clear();
    for (const auto& r : records) {
      const auto dot = r.value_text.find('.');
      const int dp = dot == std::string::npos ? 0 : static_cast<int>(r.value_text.size() - dot - 1);
      text.push_back({r.value_text, piapprox::hiprec::fx_to_string(r.signed_err_pct, dp),
                      piapprox::hiprec::fx_to_string(r.abs_err_pct, dp)});
    }
  }
};

namespace {

thread_local std::string g_last_error;

pa_status to_status(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument: return PA_ERR_INVALID_ARGUMENT;
    case ErrorCode::kDivisionByZero: return PA_ERR_DIVISION_BY_ZERO;
    case ErrorCode::kDomain: return PA_ERR_DOMAIN;
    case ErrorCode::kParse: return PA_ERR_PARSE;
    case ErrorCode::kReferenceIntegrity: return PA_ERR_REFERENCE_INTEGRITY;
    case ErrorCode::kReportShape: return PA_ERR_REPORT_SHAPE;
  }
  return PA_ERR_INTERNAL;
}

pa_status fail_with(pa_status status, std::string message) {
  g_last_error = std::move(message);
  return status;
}

template <typename Fn>
pa_status guarded(Fn&& fn) {
  try {
    g_last_error.clear();
    return fn();
  } catch (const Error& e) {
    return fail_with(to_status(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail_with(PA_ERR_OUT_OF_MEMORY, "out of memory");
  } catch (const std::exception& e) {
    return fail_with(PA_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail_with(PA_ERR_INTERNAL, "unknown exception");
  }
}

#define PA_REQUIRE(ptr)                                                            \
  do {                                                                             \
    if ((ptr) == nullptr) return fail_with(PA_ERR_NULL_POINTER, #ptr " is NULL"); \
  } while (0)

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

MethodId to_method(pa_method m) {
  if (m < PA_METHOD_WALLIS || m > PA_METHOD_ZETA8) {
    piapprox::fail(ErrorCode::kInvalidArgument, "unknown method id " + std::to_string(static_cast<int>(m)));
  }
  return static_cast<MethodId>(m);
}

pa_method from_method(MethodId m) { return static_cast<pa_method>(static_cast<int>(m)); }

template <typename Op>
pa_status binary(const pa_number* a, const pa_number* b, const pa_context* ctx, pa_number** out, Op op) {
  PA_REQUIRE(a);
  PA_REQUIRE(b);
  PA_REQUIRE(ctx);
  PA_REQUIRE(out);
  return guarded([&] {
    *out = new pa_number{op(a->value, b->value, ctx->ctx)};
    return PA_OK;
  });
}

}  // namespace

extern "C" {

const char* pa_last_error(void) { return g_last_error.c_str(); }

const char* pa_status_name(pa_status status) {
  switch (status) {
    case PA_OK: return "ok";
    case PA_ERR_INVALID_ARGUMENT: return "invalid argument";
    case PA_ERR_DIVISION_BY_ZERO: return "division by zero";
    case PA_ERR_DOMAIN: return "domain error";
    case PA_ERR_PARSE: return "parse error";
    case PA_ERR_REFERENCE_INTEGRITY: return "reference integrity error";
    case PA_ERR_REPORT_SHAPE: return "report shape error";
    case PA_ERR_NULL_POINTER: return "null pointer";
    case PA_ERR_OUT_OF_MEMORY: return "out of memory";
    case PA_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

void pa_string_free(char* s) { std::free(s); }

pa_status pa_context_new(int working_dp, int guard_dp, uint64_t max_n, pa_context** out) {
  PA_REQUIRE(out);
  return guarded([&] {
    const int guard = guard_dp < 0 ? piapprox::hiprec::default_guard_dp(max_n) : guard_dp;
    *out = new pa_context{PrecisionCtx(working_dp, guard)};
    return PA_OK;
  });
}

void pa_context_free(pa_context* ctx) { delete ctx; }
int pa_context_working_dp(const pa_context* ctx) { return ctx ? ctx->ctx.working_dp() : 0; }
int pa_context_guard_dp(const pa_context* ctx) { return ctx ? ctx->ctx.guard_dp() : 0; }

pa_status pa_number_parse(const char* text, pa_number** out) {
  PA_REQUIRE(text);
  PA_REQUIRE(out);
  return guarded([&] {
    *out = new pa_number{BigFixed::parse(text)};
    return PA_OK;
  });
}

void pa_number_free(pa_number* x) { delete x; }

pa_status pa_number_to_string(const pa_number* x, int dp, char** out) {
  PA_REQUIRE(x);
  PA_REQUIRE(out);
  return guarded([&] {
    *out = dup_string(dp < 0 ? piapprox::hiprec::fx_to_string(x->value) : piapprox::hiprec::fx_to_string(x->value, dp));
    return PA_OK;
  });
}

pa_status pa_number_add(const pa_number* a, const pa_number* b, const pa_context* ctx, pa_number** out) {
  return binary(a, b, ctx, out, piapprox::hiprec::fx_add);
}
pa_status pa_number_sub(const pa_number* a, const pa_number* b, const pa_context* ctx, pa_number** out) {
  return binary(a, b, ctx, out, piapprox::hiprec::fx_sub);
}
pa_status pa_number_mul(const pa_number* a, const pa_number* b, const pa_context* ctx, pa_number** out) {
  return binary(a, b, ctx, out, piapprox::hiprec::fx_mul);
}
pa_status pa_number_div(const pa_number* a, const pa_number* b, const pa_context* ctx, pa_number** out) {
  return binary(a, b, ctx, out, piapprox::hiprec::fx_div);
}

pa_status pa_number_sqrt(const pa_number* x, const pa_context* ctx, pa_number** out) {
  PA_REQUIRE(x);
  PA_REQUIRE(ctx);
  PA_REQUIRE(out);
  return guarded([&] {
    *out = new pa_number{piapprox::hiprec::fx_sqrt(x->value, ctx->ctx)};
    return PA_OK;
  });
}

pa_status pa_number_nth_root(const pa_number* x, unsigned degree, const pa_context* ctx, pa_number** out) {
  PA_REQUIRE(x);
  PA_REQUIRE(ctx);
  PA_REQUIRE(out);
  return guarded([&] {
    *out = new pa_number{piapprox::hiprec::fx_nth_root(x->value, degree, ctx->ctx)};
    return PA_OK;
  });
}

pa_status pa_number_compare(const pa_number* a, const pa_number* b, int* out) {
  PA_REQUIRE(a);
  PA_REQUIRE(b);
  PA_REQUIRE(out);
  const auto c = piapprox::hiprec::fx_cmp(a->value, b->value);
  *out = c < 0 ? -1 : (c > 0 ? 1 : 0);
  g_last_error.clear();
  return PA_OK;
}

pa_status pa_method_from_name(const char* name, pa_method* out) {
  PA_REQUIRE(name);
  PA_REQUIRE(out);
  const auto m = piapprox::methods::method_from_name(name);
  if (!m) return fail_with(PA_ERR_INVALID_ARGUMENT, std::string("unknown method '") + name + "'");
  *out = from_method(*m);
  g_last_error.clear();
  return PA_OK;
}

const char* pa_method_name(pa_method method) {
  if (method < PA_METHOD_WALLIS || method > PA_METHOD_ZETA8) return "unknown";
  // method_name returns views of string literals, so data() is NUL terminated.
  return piapprox::methods::method_name(static_cast<MethodId>(method)).data();
}

pa_status pa_approximant(pa_method method, uint64_t n, const pa_context* ctx, pa_number** out) {
  PA_REQUIRE(ctx);
  PA_REQUIRE(out);
  return guarded([&] {
    *out = new pa_number{piapprox::methods::approximant(to_method(method), n, ctx->ctx)};
    return PA_OK;
  });
}

pa_status pa_generator_new(pa_method method, const pa_context* ctx, pa_generator** out) {
  PA_REQUIRE(ctx);
  PA_REQUIRE(out);
  return guarded([&] {
    *out = new pa_generator{piapprox::methods::Approximant(to_method(method), ctx->ctx)};
    return PA_OK;
  });
}

void pa_generator_free(pa_generator* gen) { delete gen; }

pa_status pa_generator_advance_to(pa_generator* gen, uint64_t n) {
  PA_REQUIRE(gen);
  return guarded([&] {
    gen->gen.advance_to(n);
    return PA_OK;
  });
}

pa_status pa_generator_index(const pa_generator* gen, uint64_t* out) {
  PA_REQUIRE(gen);
  PA_REQUIRE(out);
  *out = gen->gen.n();
  g_last_error.clear();
  return PA_OK;
}

pa_status pa_generator_value(const pa_generator* gen, pa_number** out) {
  PA_REQUIRE(gen);
  PA_REQUIRE(out);
  return guarded([&] {
    *out = new pa_number{gen->gen.value()};
    return PA_OK;
  });
}

pa_status pa_reference_new(const pa_context* ctx, const char* literal, pa_reference** out) {
  PA_REQUIRE(ctx);
  PA_REQUIRE(out);
  return guarded([&] {
    std::optional<std::string_view> lit;
    if (literal != nullptr) lit = literal;
    *out = new pa_reference{piapprox::harness::reference_pi(ctx->ctx, lit)};
    return PA_OK;
  });
}

void pa_reference_free(pa_reference* ref) { delete ref; }

pa_status pa_reference_value(const pa_reference* ref, pa_number** out) {
  PA_REQUIRE(ref);
  PA_REQUIRE(out);
  return guarded([&] {
    *out = new pa_number{ref->ref.value};
    return PA_OK;
  });
}

pa_status pa_pct_error(const pa_number* x, const pa_reference* ref, const pa_context* ctx, pa_number** signed_out,
                       pa_number** abs_out) {
  PA_REQUIRE(x);
  PA_REQUIRE(ref);
  PA_REQUIRE(ctx);
  PA_REQUIRE(signed_out);
  PA_REQUIRE(abs_out);
  return guarded([&] {
    auto err = piapprox::harness::pct_error(x->value, ref->ref, ctx->ctx);
    auto* s = new pa_number{std::move(err.signed_pct)};
    try {
      *abs_out = new pa_number{std::move(err.abs_pct)};
    } catch (...) {
      delete s;
      throw;
    }
    *signed_out = s;
    return PA_OK;
  });
}

pa_status pa_digits_correct(const pa_number* x, const pa_reference* ref, int* out) {
  PA_REQUIRE(x);
  PA_REQUIRE(ref);
  PA_REQUIRE(out);
  return guarded([&] {
    *out = piapprox::harness::digits_correct(x->value, ref->ref);
    return PA_OK;
  });
}

pa_status pa_schedule_parse(const char* expr, pa_schedule** out) {
  PA_REQUIRE(expr);
  PA_REQUIRE(out);
  return guarded([&] {
    *out = new pa_schedule{piapprox::harness::Schedule::parse(expr)};
    return PA_OK;
  });
}

void pa_schedule_free(pa_schedule* schedule) { delete schedule; }
size_t pa_schedule_size(const pa_schedule* schedule) { return schedule ? schedule->schedule.size() : 0; }
uint64_t pa_schedule_max(const pa_schedule* schedule) { return schedule ? schedule->schedule.back() : 0; }

pa_status pa_run_new(pa_method method, const pa_schedule* schedule, const pa_context* ctx, const pa_reference* ref,
                     pa_run** out) {
  PA_REQUIRE(schedule);
  PA_REQUIRE(ctx);
  PA_REQUIRE(ref);
  PA_REQUIRE(out);
  return guarded([&] {
    const MethodId m = to_method(method);
    auto run = std::make_unique<pa_run>();
    run->records = piapprox::harness::run(m, schedule->schedule, ctx->ctx, ref->ref);
    run->spec = piapprox::report::custom_table_spec({m}, ctx->ctx.working_dp());
    run->cache_text();
    *out = run.release();
    return PA_OK;
  });
}

pa_status pa_compare_new(const pa_method* methods, size_t count, const pa_schedule* schedule, const pa_context* ctx,
                         const pa_reference* ref, const char* thresholds, unsigned threads, pa_run** out) {
  PA_REQUIRE(methods);
  PA_REQUIRE(schedule);
  PA_REQUIRE(ctx);
  PA_REQUIRE(ref);
  PA_REQUIRE(out);
  return guarded([&] {
    std::vector<MethodId> ids;
    for (size_t i = 0; i < count; ++i) ids.push_back(to_method(methods[i]));
    std::vector<BigFixed> limits;
    if (thresholds != nullptr && *thresholds != '\0') limits = piapprox::harness::parse_thresholds(thresholds);
    auto result = piapprox::harness::compare(ids, schedule->schedule, ctx->ctx, ref->ref, limits, threads);
    auto run = std::make_unique<pa_run>();
    run->records = piapprox::report::flatten(result);
    run->spec = piapprox::report::custom_table_spec(ids, ctx->ctx.working_dp());
    run->crossover = std::move(result.crossover);
    run->cache_text();
    *out = run.release();
    return PA_OK;
  });
}

pa_status pa_table_new(int id, const char* reference_literal, unsigned threads, pa_run** out) {
  PA_REQUIRE(out);
  return guarded([&] {
    const auto preset = piapprox::harness::table_preset(id);
    const PrecisionCtx ctx = preset.ctx();
    std::optional<std::string_view> lit;
    if (reference_literal != nullptr) lit = reference_literal;
    const auto ref = piapprox::harness::reference_pi(ctx, lit);
    auto runs = piapprox::harness::run_many(preset.methods, preset.schedule, ctx, ref, threads);
    auto run = std::make_unique<pa_run>();
    for (std::size_t i = 0; i < preset.schedule.size(); ++i) {
      for (const auto& r : runs) run->records.push_back(r[i]);
    }
    run->spec = piapprox::report::builtin_table_spec(id);
    run->cache_text();
    *out = run.release();
    return PA_OK;
  });
}

void pa_run_free(pa_run* run) { delete run; }
size_t pa_run_size(const pa_run* run) { return run ? run->records.size() : 0; }

pa_status pa_run_record(const pa_run* run, size_t index, pa_record* out) {
  PA_REQUIRE(run);
  PA_REQUIRE(out);
  if (index >= run->records.size()) return fail_with(PA_ERR_INVALID_ARGUMENT, "record index out of range");
  const auto& r = run->records[index];
  const auto& t = run->text[index];
  *out = pa_record{from_method(r.method), r.n,           t.value.c_str(), t.signed_err.c_str(),
                   t.abs_err.c_str(),     r.digits_correct, static_cast<int64_t>(r.elapsed.count())};
  g_last_error.clear();
  return PA_OK;
}

pa_status pa_run_crossover(const pa_run* run, size_t method_index, size_t threshold_index, int* reached,
                           uint64_t* n) {
  PA_REQUIRE(run);
  PA_REQUIRE(reached);
  PA_REQUIRE(n);
  if (!run->crossover) return fail_with(PA_ERR_INVALID_ARGUMENT, "run has no crossover report");
  const auto& c = *run->crossover;
  if (method_index >= c.first_n.size() || threshold_index >= c.thresholds.size()) {
    return fail_with(PA_ERR_INVALID_ARGUMENT, "crossover index out of range");
  }
  const auto& hit = c.first_n[method_index][threshold_index];
  *reached = hit.has_value() ? 1 : 0;
  *n = hit.value_or(0);
  g_last_error.clear();
  return PA_OK;
}

pa_status pa_run_render(const pa_run* run, pa_format format, unsigned flags, char** out) {
  PA_REQUIRE(run);
  PA_REQUIRE(out);
  return guarded([&] {
    std::vector<piapprox::harness::RunRecord> copy;
    const std::vector<piapprox::harness::RunRecord>* records = &run->records;
    if ((flags & PA_RENDER_NO_TIMING) != 0) {
      copy = run->records;
      for (auto& r : copy) r.elapsed = std::chrono::nanoseconds(0);
      records = &copy;
    }
    std::string text;
    switch (format) {
      case PA_FORMAT_MARKDOWN:
        text = piapprox::report::render_markdown(*records, run->spec);
        if (run->crossover && !run->crossover->thresholds.empty()) {
          text += "\n" + piapprox::report::render_crossover(*run->crossover);
        }
        break;
      case PA_FORMAT_CSV: text = piapprox::report::render_csv(*records); break;
      case PA_FORMAT_PLOT: text = piapprox::report::render_plot_data(*records); break;
      default: piapprox::fail(ErrorCode::kInvalidArgument, "unknown format");
    }
    *out = dup_string(text);
    return PA_OK;
  });
}

pa_status pa_compare_preset(const char* name, pa_method* first, pa_method* second, const char** schedule,
                            const char** thresholds) {
  PA_REQUIRE(name);
  PA_REQUIRE(first);
  PA_REQUIRE(second);
  PA_REQUIRE(schedule);
  PA_REQUIRE(thresholds);
  return guarded([&] {
    const auto& p = piapprox::harness::compare_preset(name);
    *first = from_method(p.first);
    *second = from_method(p.second);
    // Preset strings are literals.
    *schedule = p.schedule.data();
    *thresholds = p.thresholds.data();
    return PA_OK;
  });
}

pa_status pa_time_to_digits(pa_method method, int target_digits, const pa_context* ctx, const pa_reference* ref,
                            uint64_t step_budget, int* reached, uint64_t* n, int64_t* elapsed_ns) {
  PA_REQUIRE(ctx);
  PA_REQUIRE(ref);
  PA_REQUIRE(reached);
  PA_REQUIRE(n);
  PA_REQUIRE(elapsed_ns);
  return guarded([&] {
    const auto hit = piapprox::harness::time_to_digits(to_method(method), target_digits, ctx->ctx, ref->ref,
                                                       step_budget);
    *reached = hit ? 1 : 0;
    *n = hit ? hit->n : 0;
    *elapsed_ns = hit ? static_cast<int64_t>(hit->elapsed.count()) : 0;
    return PA_OK;
  });
}

pa_status pa_selftest(unsigned threads, int* passed, char** report) {
  PA_REQUIRE(passed);
  PA_REQUIRE(report);
  return guarded([&] {
    const auto result = piapprox::harness::run_selftest(threads);
    *report = dup_string(piapprox::harness::render_selftest(result));
    *passed = result.passed() ? 1 : 0;
    return PA_OK;
  });
}

}  // extern "C"

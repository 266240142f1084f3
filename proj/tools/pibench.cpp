// pibench: run, compare and tabulate pi approximants through the piapprox C API.
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "piapprox/piapprox.h"

namespace {

enum ExitCode { kOk = 0, kUsage = 1, kReference = 2, kSelftestFailed = 3, kRuntime = 4 };

// Thrown by the helpers below; carries the exit code for main.
struct Failure {
  int exit_code;
  std::string message;
};

int exit_code_for(pa_status s) {
  switch (s) {
    case PA_ERR_INVALID_ARGUMENT:
    case PA_ERR_PARSE: return kUsage;
    case PA_ERR_REFERENCE_INTEGRITY: return kReference;
    default: return kRuntime;
  }
}

void check(pa_status s) {
  if (s != PA_OK) throw Failure{exit_code_for(s), std::string(pa_status_name(s)) + ": " + pa_last_error()};
}

template <typename T, void (*Free)(T*)>
struct Deleter {
  void operator()(T* p) const { Free(p); }
};
using Context = std::unique_ptr<pa_context, Deleter<pa_context, pa_context_free>>;
using Reference = std::unique_ptr<pa_reference, Deleter<pa_reference, pa_reference_free>>;
using Schedule = std::unique_ptr<pa_schedule, Deleter<pa_schedule, pa_schedule_free>>;
using Run = std::unique_ptr<pa_run, Deleter<pa_run, pa_run_free>>;
using Text = std::unique_ptr<char, Deleter<char, pa_string_free>>;

struct Options {
  std::string method;
  std::string methods;
  std::string schedule;
  std::string preset;
  std::string thresholds;
  int dp = 15;
  std::optional<int> guard;
  std::string format = "md";
  std::string out;
  std::optional<std::string> reference;
  unsigned threads = 0;
  int table_id = 0;
};

pa_method parse_method(const std::string& name) {
  pa_method m{};
  if (pa_method_from_name(name.c_str(), &m) != PA_OK) {
    throw Failure{kUsage, "unknown method '" + name + "' (expected wallis, leibniz, newton, eulercf, viete, "
                          "zeta2, zeta4, zeta6 or zeta8)"};
  }
  return m;
}

pa_format parse_format(const std::string& f) {
  if (f == "md" || f == "markdown") return PA_FORMAT_MARKDOWN;
  if (f == "csv") return PA_FORMAT_CSV;
  if (f == "plot") return PA_FORMAT_PLOT;
  throw Failure{kUsage, "unknown format '" + f + "' (expected md, csv or plot)"};
}

Schedule make_schedule(const std::string& expr) {
  pa_schedule* s = nullptr;
  check(pa_schedule_parse(expr.c_str(), &s));
  return Schedule(s);
}

Context make_context(const Options& o, uint64_t max_n) {
  pa_context* c = nullptr;
  check(pa_context_new(o.dp, o.guard.value_or(-1), max_n, &c));
  return Context(c);
}

Reference make_reference(const Options& o, const pa_context* ctx) {
  pa_reference* r = nullptr;
  check(pa_reference_new(ctx, o.reference ? o.reference->c_str() : nullptr, &r));
  return Reference(r);
}

void emit(const Options& o, const std::string& text) {
  if (o.out.empty()) {
    std::cout << text;
    std::cout.flush();
    return;
  }
  std::ofstream file(o.out, std::ios::binary);
  file << text;
  if (!file) throw Failure{kRuntime, "cannot write '" + o.out + "'"};
}

std::string render(const pa_run* run, pa_format format, unsigned flags) {
  char* text = nullptr;
  check(pa_run_render(run, format, flags, &text));
  return Text(text).get();
}

int cmd_run(const Options& o) {
  const pa_method method = parse_method(o.method);
  const pa_format format = parse_format(o.format);
  Schedule schedule = make_schedule(o.schedule);
  Context ctx = make_context(o, pa_schedule_max(schedule.get()));
  Reference ref = make_reference(o, ctx.get());
  pa_run* raw = nullptr;
  check(pa_run_new(method, schedule.get(), ctx.get(), ref.get(), &raw));
  Run run(raw);
  emit(o, render(run.get(), format, 0));
  return kOk;
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream in(text);
  for (std::string item; std::getline(in, item, ',');) out.push_back(item);
  return out;
}

int cmd_compare(Options o) {
  std::vector<pa_method> methods;
  if (!o.preset.empty()) {
    pa_method first{}, second{};
    const char* schedule = nullptr;
    const char* thresholds = nullptr;
    check(pa_compare_preset(o.preset.c_str(), &first, &second, &schedule, &thresholds));
    methods = {first, second};
    if (o.schedule.empty()) o.schedule = schedule;
    if (o.thresholds.empty()) o.thresholds = thresholds;
  }
  if (!o.methods.empty()) {
    methods.clear();
    for (const auto& name : split_list(o.methods)) methods.push_back(parse_method(name));
  }
  if (methods.size() < 2) throw Failure{kUsage, "compare needs --methods a,b[,...] or --preset"};
  if (o.schedule.empty()) o.schedule = "1:30:1";
  const pa_format format = parse_format(o.format);
  Schedule schedule = make_schedule(o.schedule);
  Context ctx = make_context(o, pa_schedule_max(schedule.get()));
  Reference ref = make_reference(o, ctx.get());
  pa_run* raw = nullptr;
  check(pa_compare_new(methods.data(), methods.size(), schedule.get(), ctx.get(), ref.get(),
                       o.thresholds.empty() ? nullptr : o.thresholds.c_str(), o.threads, &raw));
  Run run(raw);
  emit(o, render(run.get(), format, 0));
  return kOk;
}

int cmd_table(const Options& o) {
  const pa_format format = parse_format(o.format);
  pa_run* raw = nullptr;
  check(pa_table_new(o.table_id, o.reference ? o.reference->c_str() : nullptr, o.threads, &raw));
  Run run(raw);
  emit(o, render(run.get(), format, PA_RENDER_NO_TIMING));
  return kOk;
}

int cmd_selftest(const Options& o) {
  int passed = 0;
  char* report = nullptr;
  check(pa_selftest(o.threads, &passed, &report));
  emit(o, Text(report).get());
  return passed ? kOk : kSelftestFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"High-precision pi approximants: runs, comparisons, table reproduction and self-test"};
  app.require_subcommand(1);
  Options o;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--out", o.out, "Write output to this file instead of stdout");
    cmd->add_option("--threads", o.threads, "Worker threads (default: PIAPPROX_THREADS or all cores)");
  };
  auto add_precision = [&](CLI::App* cmd) {
    cmd->add_option("--dp", o.dp, "Working decimal places")->capture_default_str();
    cmd->add_option("--guard", o.guard, "Guard digits (default 10 + ceil(log10(max n)))");
    cmd->add_option("--format", o.format, "md, csv or plot")->capture_default_str();
    cmd->add_option("--reference", o.reference, "Use this decimal as pi instead of computing it");
  };

  auto* run = app.add_subcommand("run", "Evaluate one method over a schedule");
  run->add_option("--method", o.method, "Method id")->required();
  run->add_option("--schedule", o.schedule, "Comma list of N or start:stop:step")->required();
  add_precision(run);
  add_common(run);

  auto* cmp = app.add_subcommand("compare", "Evaluate methods side by side with crossover points");
  cmp->add_option("--methods", o.methods, "Comma separated method ids");
  cmp->add_option("--preset", o.preset,
                  "leibniz-newton, viete-eulercf, wallis-newton, wallis-zeta2 or newton-zeta8");
  cmp->add_option("--schedule", o.schedule, "Comma list of N or start:stop:step (default 1:30:1)");
  cmp->add_option("--thresholds", o.thresholds, "Strictly decreasing abs-error percentages, e.g. 1e-3,1e-8");
  add_precision(cmp);
  add_common(cmp);

  auto* table = app.add_subcommand("table", "Reproduce a built-in reference table");
  table->add_option("--id", o.table_id, "Table number 1..7")->required();
  table->add_option("--format", o.format, "md, csv or plot")->capture_default_str();
  table->add_option("--reference", o.reference, "Use this decimal as pi instead of computing it");
  add_common(table);

  auto* selftest = app.add_subcommand("selftest", "Invariant checks and golden-table audit");
  add_common(selftest);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::Error& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (run->parsed()) return cmd_run(o);
    if (cmp->parsed()) return cmd_compare(o);
    if (table->parsed()) return cmd_table(o);
    return cmd_selftest(o);
  } catch (const Failure& f) {
    std::cerr << "pibench: " << f.message << "\n";
    return f.exit_code;
  }
}

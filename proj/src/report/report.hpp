#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "harness/runner.hpp"

namespace piapprox::report {

using harness::CompareResult;
using harness::CrossoverReport;
using harness::RunRecord;
using methods::MethodId;

/// Column layout of a Markdown table. table_id 0 means custom.
struct TableSpec {
  int table_id = 0;
  std::vector<MethodId> methods;
  int value_dp = 15;
  int error_dp = 5;
  bool show_values = true;
  bool show_errors = true;
};

/// Layout of built-in table `id` (1..7); Error(kInvalidArgument) otherwise.
TableSpec builtin_table_spec(int id);
/// Value and absolute-error columns for each method.
TableSpec custom_table_spec(std::vector<MethodId> methods, int value_dp, int error_dp = 5);

/// One row per n. Every method in the spec must cover the same n values and no
/// record may belong to another method; violations are Error(kReportShape).
std::string render_markdown(const std::vector<RunRecord>& records, const TableSpec& spec);

inline constexpr std::string_view kCsvHeader = "method,n,value,signed_err_pct,abs_err_pct,digits_correct,elapsed_ns";

/// Values at working_dp as carried in the record; errors at the same number of
/// decimals, rounded half-even. LF terminated.
std::string render_csv(const std::vector<RunRecord>& records);

struct CsvRow {
  std::string method;
  std::uint64_t n;
  std::string value;
  std::string signed_err_pct;
  std::string abs_err_pct;
  int digits_correct;
  std::int64_t elapsed_ns;

  friend bool operator==(const CsvRow&, const CsvRow&) = default;
};

/// Inverse of render_csv. Throws Error(kParse) on a bad header or row.
std::vector<CsvRow> parse_csv(std::string_view text);

/// Per method: (n, value), (n, signed_err_pct) and (n, abs_err_pct) blocks,
/// each preceded by a '#' comment and separated by two blank lines.
std::string render_plot_data(const std::vector<RunRecord>& records);

/// Markdown listing, per method, the first n below each threshold.
std::string render_crossover(const CrossoverReport& report);

/// Paired table (custom layout) followed by the crossover table.
std::string render_compare_markdown(const CompareResult& result, int value_dp);

/// All records, methods interleaved per n.
std::vector<RunRecord> flatten(const CompareResult& result);

}  // namespace piapprox::report

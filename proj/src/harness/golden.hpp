#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "harness/runner.hpp"

namespace piapprox::harness {

enum class GoldenKind { kValue, kError };

/// normative: must match. divergent: the expected cell is a known
/// transcription error and `recomputed` holds what exact arithmetic gives.
/// informational: recomputed and reported, never a failure.
enum class GoldenStatus { kNormative, kDivergent, kInformational };

struct GoldenCell {
  int table;
  std::uint64_t n;
  MethodId method;
  GoldenKind kind;
  std::string expected;
  GoldenStatus status;
  std::string recomputed;
};

/// Raw CSV compiled into the library.
std::string_view embedded_golden_csv() noexcept;
/// Throws Error(kParse) if the CSV is malformed.
std::vector<GoldenCell> parse_golden_csv(std::string_view text);
/// Parsed embedded table, cached.
const std::vector<GoldenCell>& golden_cells();

enum class Verdict {
  kMatch,
  kMismatch,            // normative cell differs: failure
  kExpectedDivergent,   // divergent cell reproduces its recomputed value
  kDivergentRegressed,  // divergent cell no longer equals its recomputed value: failure
  kRecomputed,          // informational cell differs from the expected text
};

std::string_view verdict_label(Verdict v) noexcept;

struct AuditEntry {
  GoldenCell cell;
  std::string ours;
  Verdict verdict;
  std::string note;

  bool failed() const noexcept { return verdict == Verdict::kMismatch || verdict == Verdict::kDivergentRegressed; }
};

struct TableAudit {
  int table;
  std::vector<AuditEntry> entries;

  std::size_t count(Verdict v) const noexcept;
  bool passed() const noexcept;
};

/// Compares the golden cells of `table` against records produced with that
/// table's preset. Errors are compared as absolute values at 5 dp. A golden
/// cell without a matching record is Error(kReportShape).
TableAudit audit_table(int table, const std::vector<RunRecord>& records);

/// Runs every preset (shared runs in parallel) and audits all seven tables.
std::vector<TableAudit> audit_all_tables(unsigned threads = 0);

/// Per table: a summary line, then one line per non-matching cell.
std::string render_audit(const std::vector<TableAudit>& audits);

}  // namespace piapprox::harness

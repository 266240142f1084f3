#include "harness/golden.hpp"

#include <algorithm>
#include <charconv>
#include <map>

#include "common/error.hpp"
#include "harness/table_presets.hpp"
#include "harness/parallel.hpp"

namespace piapprox::harness {

namespace {

std::vector<std::string_view> split(std::string_view line, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (;;) {
    const std::size_t at = line.find(sep, start);
    out.push_back(line.substr(start, at == std::string_view::npos ? std::string_view::npos : at - start));
    if (at == std::string_view::npos) return out;
    start = at + 1;
  }
}

constexpr std::string_view kGoldenHeader = "table,n,column,kind,expected,status,recomputed";

std::string ours_for(const GoldenCell& cell, const RunRecord& r, int value_dp) {
  return cell.kind == GoldenKind::kValue ? hiprec::fx_to_string(r.value, value_dp)
                                         : hiprec::fx_to_string(r.abs_err_pct, 5);
}

}  // namespace

std::vector<GoldenCell> parse_golden_csv(std::string_view text) {
  std::vector<GoldenCell> cells;
  std::size_t line_no = 0;
  for (std::string_view line : split(text, '\n')) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty()) continue;
    if (line_no == 1) {
      if (line != kGoldenHeader) fail(ErrorCode::kParse, "golden csv: unexpected header");
      continue;
    }
    auto bad = [&](const char* why) {
      fail(ErrorCode::kParse, "golden csv line " + std::to_string(line_no) + ": " + why);
    };
    const auto f = split(line, ',');
    if (f.size() != 7) bad("expected 7 fields");
    GoldenCell cell{};
    auto [p1, e1] = std::from_chars(f[0].data(), f[0].data() + f[0].size(), cell.table);
    auto [p2, e2] = std::from_chars(f[1].data(), f[1].data() + f[1].size(), cell.n);
    if (e1 != std::errc() || e2 != std::errc() || cell.table < 1 || cell.table > kTableCount) bad("bad index");
    const auto method = methods::method_from_name(f[2]);
    if (!method) bad("unknown method");
    cell.method = *method;
    if (f[3] == "value") {
      cell.kind = GoldenKind::kValue;
    } else if (f[3] == "error") {
      cell.kind = GoldenKind::kError;
    } else {
      bad("bad kind");
    }
    cell.expected = std::string(f[4]);
    if (f[5] == "normative") {
      cell.status = GoldenStatus::kNormative;
    } else if (f[5] == "divergent") {
      cell.status = GoldenStatus::kDivergent;
      if (f[6].empty()) bad("divergent cell without recomputed value");
    } else if (f[5] == "informational") {
      cell.status = GoldenStatus::kInformational;
    } else {
      bad("bad status");
    }
    cell.recomputed = std::string(f[6]);
    cells.push_back(std::move(cell));
  }
  return cells;
}

const std::vector<GoldenCell>& golden_cells() {
  static const std::vector<GoldenCell> cells = parse_golden_csv(embedded_golden_csv());
  return cells;
}

std::string_view verdict_label(Verdict v) noexcept {
  switch (v) {
    case Verdict::kMatch: return "MATCH";
    case Verdict::kMismatch: return "MISMATCH";
    case Verdict::kExpectedDivergent: return "EXPECTED-DIVERGENT";
    case Verdict::kDivergentRegressed: return "DIVERGENT-REGRESSED";
    case Verdict::kRecomputed: return "RECOMPUTED";
  }
  return "?";
}

std::size_t TableAudit::count(Verdict v) const noexcept {
  return static_cast<std::size_t>(
      std::count_if(entries.begin(), entries.end(), [v](const AuditEntry& e) { return e.verdict == v; }));
}

bool TableAudit::passed() const noexcept {
  return std::none_of(entries.begin(), entries.end(), [](const AuditEntry& e) { return e.failed(); });
}

TableAudit audit_table(int table, const std::vector<RunRecord>& records) {
  const TablePreset preset = table_preset(table);
  std::map<std::pair<MethodId, std::uint64_t>, const RunRecord*> by_key;
  for (const auto& r : records) by_key[{r.method, r.n}] = &r;

  TableAudit audit{table, {}};
  std::vector<const GoldenCell*> cells;
  for (const auto& c : golden_cells()) {
    if (c.table == table) cells.push_back(&c);
  }
  for (const GoldenCell* c : cells) {
    const auto it = by_key.find({c->method, c->n});
    if (it == by_key.end()) {
      fail(ErrorCode::kReportShape, "table " + std::to_string(table) + ": no record for " +
                                        std::string(methods::method_name(c->method)) + " n=" + std::to_string(c->n));
    }
    AuditEntry entry{*c, ours_for(*c, *it->second, preset.working_dp), Verdict::kMatch, {}};
    switch (c->status) {
      case GoldenStatus::kNormative:
        entry.verdict = entry.ours == c->expected ? Verdict::kMatch : Verdict::kMismatch;
        break;
      case GoldenStatus::kDivergent:
        entry.verdict = entry.ours == c->recomputed ? Verdict::kExpectedDivergent : Verdict::kDivergentRegressed;
        if (entry.verdict == Verdict::kDivergentRegressed) entry.note = "expected " + c->recomputed;
        break;
      case GoldenStatus::kInformational:
        entry.verdict = entry.ours == c->expected ? Verdict::kMatch : Verdict::kRecomputed;
        break;
    }
    if (entry.verdict != Verdict::kMatch && entry.verdict != Verdict::kDivergentRegressed) {
      // Row shift: the printed cell equals what the next sampled row computes.
      const auto& points = preset.schedule.points();
      const auto pos = std::find(points.begin(), points.end(), c->n);
      // A printed zero matches every later row, which says nothing about shifting.
      const bool zero = BigFixed::parse(c->expected).is_zero();
      if (!zero && pos != points.end() && std::next(pos) != points.end()) {
        const auto next = by_key.find({c->method, *std::next(pos)});
        if (next != by_key.end() && ours_for(*c, *next->second, preset.working_dp) == c->expected) {
          entry.note = "row-shifted: expected value is the n=" + std::to_string(*std::next(pos)) + " result";
        }
      }
    }
    audit.entries.push_back(std::move(entry));
  }
  return audit;
}

std::vector<TableAudit> audit_all_tables(unsigned threads) {
  struct Job {
    int table;
    MethodId method;
  };
  // Table 7 reuses Table 6's runs; longest runs first.
  std::vector<Job> jobs;
  for (int t : {1, 2, 3, 4, 5, 6}) {
    for (MethodId m : table_preset(t).methods) jobs.push_back({t, m});
  }
  std::map<int, ReferencePi> refs;
  for (int t : {1, 2, 3, 4, 5, 6}) refs.emplace(t, reference_pi(table_preset(t).ctx()));

  std::vector<std::vector<RunRecord>> results(jobs.size());
  parallel_for(jobs.size(), threads == 0 ? default_thread_count() : threads, [&](std::size_t i) {
    const TablePreset preset = table_preset(jobs[i].table);
    results[i] = run(jobs[i].method, preset.schedule, preset.ctx(), refs.at(jobs[i].table));
  });

  std::map<int, std::vector<RunRecord>> per_table;
  for (std::size_t i = 0; i < jobs.size(); ++i) {
    auto& dst = per_table[jobs[i].table];
    dst.insert(dst.end(), results[i].begin(), results[i].end());
  }
  per_table[7] = per_table[6];

  std::vector<TableAudit> audits;
  for (int t = 1; t <= kTableCount; ++t) audits.push_back(audit_table(t, per_table[t]));
  return audits;
}

std::string render_audit(const std::vector<TableAudit>& audits) {
  std::string out;
  for (const auto& a : audits) {
    const auto methods_in = table_preset(a.table).methods;
    std::string names;
    for (MethodId m : methods_in) names += (names.empty() ? "" : ",") + std::string(methods::method_name(m));
    out += "Table " + std::to_string(a.table) + " (" + names + "): " + std::to_string(a.entries.size()) +
           " cells, " + std::to_string(a.count(Verdict::kMatch)) + " match, " +
           std::to_string(a.count(Verdict::kMismatch)) + " mismatch, " +
           std::to_string(a.count(Verdict::kExpectedDivergent)) + " expected-divergent, " +
           std::to_string(a.count(Verdict::kRecomputed)) + " recomputed" +
           (a.count(Verdict::kDivergentRegressed) > 0
                ? ", " + std::to_string(a.count(Verdict::kDivergentRegressed)) + " divergent-regressed"
                : std::string()) +
           (a.passed() ? " [ok]" : " [FAIL]") + "\n";
    for (const auto& e : a.entries) {
      if (e.verdict == Verdict::kMatch) continue;
      std::string line = "  ";
      line += verdict_label(e.verdict);
      line.resize(std::max<std::size_t>(line.size() + 1, 23), ' ');
      line += "table " + std::to_string(e.cell.table) + " n=" + std::to_string(e.cell.n) + " " +
              std::string(methods::method_name(e.cell.method)) +
              (e.cell.kind == GoldenKind::kValue ? " value" : " error") + ": expected " + e.cell.expected + ", recomputed " +
              e.ours;
      if (!e.note.empty()) line += " (" + e.note + ")";
      out += line + "\n";
    }
  }
  return out;
}

}  // namespace piapprox::harness

#include "report/report.hpp"

#include <algorithm>
#include <charconv>
#include <map>

#include "common/error.hpp"
#include "harness/table_presets.hpp"

namespace piapprox::report {

using hiprec::fx_to_string;

namespace {

std::string zeta_label(MethodId id) {
  switch (id) {
    case MethodId::kZeta2: return "ζ(2)";
    case MethodId::kZeta4: return "ζ(4)";
    case MethodId::kZeta6: return "ζ(6)";
    case MethodId::kZeta8: return "ζ(8)";
    default: return std::string(methods::method_name(id));
  }
}

std::vector<std::string> header_cells(const TableSpec& spec) {
  const int id = spec.table_id;
  if (id >= 1 && id <= 5) {
    return {"n value", "Method#" + std::to_string(id), id == 1 ? "Error (%)" : "Error(%)"};
  }
  std::vector<std::string> cells = {id == 0 ? "n" : "n value"};
  for (MethodId m : spec.methods) {
    if (id == 6 || id == 7) {
      cells.push_back(zeta_label(m));
      continue;
    }
    if (spec.show_values) cells.emplace_back(methods::method_name(m));
    if (spec.show_errors) cells.push_back(std::string(methods::method_name(m)) + " error (%)");
  }
  return cells;
}

std::string row(const std::vector<std::string>& cells) {
  std::string out = "|";
  for (const auto& c : cells) out += " " + c + " |";
  out += "\n";
  return out;
}

// Decimals carried by a record's value_text.
int text_dp(const RunRecord& r) {
  const auto dot = r.value_text.find('.');
  return dot == std::string::npos ? 0 : static_cast<int>(r.value_text.size() - dot - 1);
}

// Records grouped per method, preserving first-appearance order.
std::vector<std::pair<MethodId, std::vector<const RunRecord*>>> group(const std::vector<RunRecord>& records) {
  std::vector<std::pair<MethodId, std::vector<const RunRecord*>>> groups;
  for (const auto& r : records) {
    auto it = std::find_if(groups.begin(), groups.end(), [&](const auto& g) { return g.first == r.method; });
    if (it == groups.end()) {
      groups.push_back({r.method, {}});
      it = std::prev(groups.end());
    }
    it->second.push_back(&r);
  }
  return groups;
}

std::string shape_message(const TableSpec& spec, const std::string& what) {
  const std::string label = spec.table_id == 0 ? "custom table" : "table " + std::to_string(spec.table_id);
  return label + ": " + what;
}

}  // namespace

TableSpec builtin_table_spec(int id) {
  const auto preset = harness::table_preset(id);
  TableSpec spec;
  spec.table_id = id;
  spec.methods = preset.methods;
  spec.value_dp = preset.working_dp;
  spec.error_dp = 5;
  spec.show_values = id != 7;
  spec.show_errors = id != 6;
  return spec;
}

TableSpec custom_table_spec(std::vector<MethodId> methods, int value_dp, int error_dp) {
  TableSpec spec;
  spec.methods = std::move(methods);
  spec.value_dp = value_dp;
  spec.error_dp = error_dp;
  return spec;
}

std::string render_markdown(const std::vector<RunRecord>& records, const TableSpec& spec) {
  if (spec.methods.empty()) fail(ErrorCode::kReportShape, shape_message(spec, "no methods"));
  if (records.empty()) fail(ErrorCode::kReportShape, shape_message(spec, "no records"));
  if (spec.value_dp < 0 || spec.error_dp < 0) fail(ErrorCode::kReportShape, shape_message(spec, "negative dp"));

  // n -> per-method record, in spec column order.
  std::map<std::uint64_t, std::vector<const RunRecord*>> rows;
  for (const auto& r : records) {
    const auto col = std::find(spec.methods.begin(), spec.methods.end(), r.method);
    if (col == spec.methods.end()) {
      fail(ErrorCode::kReportShape,
           shape_message(spec, "unexpected method " + std::string(methods::method_name(r.method))));
    }
    auto& cells = rows[r.n];
    cells.resize(spec.methods.size(), nullptr);
    auto& slot = cells[static_cast<std::size_t>(col - spec.methods.begin())];
    if (slot != nullptr) {
      fail(ErrorCode::kReportShape, shape_message(spec, "duplicate record for n=" + std::to_string(r.n)));
    }
    slot = &r;
  }

  const auto header = header_cells(spec);
  std::string out = row(header);
  out += row(std::vector<std::string>(header.size(), "---"));
  for (const auto& [n, cells] : rows) {
    std::vector<std::string> line = {std::to_string(n)};
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (cells[i] == nullptr) {
        fail(ErrorCode::kReportShape, shape_message(spec, std::string(methods::method_name(spec.methods[i])) +
                                                              " has no record for n=" + std::to_string(n)));
      }
      if (spec.show_values) line.push_back(fx_to_string(cells[i]->value, spec.value_dp));
      if (spec.show_errors) line.push_back(fx_to_string(cells[i]->abs_err_pct, spec.error_dp));
    }
    out += row(line);
  }
  return out;
}

std::string render_csv(const std::vector<RunRecord>& records) {
  std::string out(kCsvHeader);
  out += '\n';
  for (const auto& r : records) {
    const int dp = text_dp(r);
    out += methods::method_name(r.method);
    out += ',' + std::to_string(r.n);
    out += ',' + r.value_text;
    out += ',' + fx_to_string(r.signed_err_pct, dp);
    out += ',' + fx_to_string(r.abs_err_pct, dp);
    out += ',' + std::to_string(r.digits_correct);
    out += ',' + std::to_string(r.elapsed.count());
    out += '\n';
  }
  return out;
}

std::vector<CsvRow> parse_csv(std::string_view text) {
  std::vector<CsvRow> rows;
  std::size_t pos = 0;
  std::size_t line_no = 0;
  auto bad = [&](const std::string& why) {
    fail(ErrorCode::kParse, "csv line " + std::to_string(line_no) + ": " + why);
  };
  while (pos < text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    const std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;
    if (line_no == 1) {
      if (line != kCsvHeader) bad("unexpected header");
      continue;
    }
    std::vector<std::string_view> fields;
    std::size_t start = 0;
    for (;;) {
      const std::size_t comma = line.find(',', start);
      fields.push_back(line.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start));
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
    if (fields.size() != 7) bad("expected 7 fields");
    CsvRow row;
    row.method = std::string(fields[0]);
    if (!methods::method_from_name(row.method)) bad("unknown method '" + row.method + "'");
    auto to_int = [&](std::string_view f, auto& out) {
      auto [ptr, ec] = std::from_chars(f.data(), f.data() + f.size(), out);
      if (f.empty() || ec != std::errc() || ptr != f.data() + f.size()) bad("bad integer '" + std::string(f) + "'");
    };
    to_int(fields[1], row.n);
    row.value = std::string(fields[2]);
    row.signed_err_pct = std::string(fields[3]);
    row.abs_err_pct = std::string(fields[4]);
    for (const auto& f : {row.value, row.signed_err_pct, row.abs_err_pct}) {
      try {
        hiprec::BigFixed::parse(f);
      } catch (const Error&) {
        bad("bad decimal '" + f + "'");
      }
    }
    to_int(fields[5], row.digits_correct);
    to_int(fields[6], row.elapsed_ns);
    rows.push_back(std::move(row));
  }
  if (line_no == 0) fail(ErrorCode::kParse, "csv is empty");
  return rows;
}

std::string render_plot_data(const std::vector<RunRecord>& records) {
  std::string out;
  bool first_block = true;
  auto block = [&](MethodId m, std::string_view column, const std::vector<const RunRecord*>& rs, auto cell) {
    if (!first_block) out += "\n\n";
    first_block = false;
    out += "# ";
    out += methods::method_name(m);
    out += ": n ";
    out += column;
    out += '\n';
    for (const RunRecord* r : rs) out += std::to_string(r->n) + ' ' + cell(*r) + '\n';
  };
  for (const auto& [method, rs] : group(records)) {
    block(method, "value", rs, [](const RunRecord& r) { return r.value_text; });
    block(method, "signed_err_pct", rs, [](const RunRecord& r) { return fx_to_string(r.signed_err_pct, text_dp(r)); });
    block(method, "abs_err_pct", rs, [](const RunRecord& r) { return fx_to_string(r.abs_err_pct, text_dp(r)); });
  }
  return out;
}

std::string render_crossover(const CrossoverReport& report) {
  std::vector<std::string> header = {"method"};
  for (const auto& t : report.thresholds) header.push_back("abs err < " + fx_to_string(t) + "%");
  std::string out = row(header);
  out += row(std::vector<std::string>(header.size(), "---"));
  for (std::size_t m = 0; m < report.methods.size(); ++m) {
    std::vector<std::string> line = {std::string(methods::method_name(report.methods[m]))};
    for (const auto& n : report.first_n[m]) {
      line.push_back(n ? "n=" + std::to_string(*n) : "not reached by n=" + std::to_string(report.budget));
    }
    out += row(line);
  }
  return out;
}

std::vector<RunRecord> flatten(const CompareResult& result) {
  std::vector<RunRecord> out;
  const std::size_t rows = result.runs.empty() ? 0 : result.runs.front().size();
  for (std::size_t i = 0; i < rows; ++i) {
    for (const auto& run : result.runs) out.push_back(run.at(i));
  }
  return out;
}

std::string render_compare_markdown(const CompareResult& result, int value_dp) {
  std::string out = render_markdown(flatten(result), custom_table_spec(result.methods, value_dp));
  if (!result.crossover.thresholds.empty()) {
    out += "\n";
    out += render_crossover(result.crossover);
  }
  return out;
}

}  // namespace piapprox::report

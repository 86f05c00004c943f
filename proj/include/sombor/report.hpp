// Report serialization: deterministic CSV and JSON rendering of index tables,
// bound-check records, verification summaries, and closed-form comparison
// rows, plus the matching CSV parser used for lossless round-trips.
//
// Numbers are printed with 12 significant digits through std::to_chars, so
// output is locale-independent and byte-stable across runs and platforms;
// JSON carries the same values rounded through the same formatter.  CSV field
// order is fixed and relied upon by downstream tooling:
//
//   bound-check records:  bound_id,alpha,n,m,graph6,lhs,rhs,direction,slack,
//                         holds,eq_pred,eq_obs
//   index rows:           graph_index,graph6,n,m,index,param,value
//   family rows:          family,n,alpha,closed_form,direct,abs_diff,
//                         paper_variant,paper_abs_diff,note
//
// The `swapped` flag of a record never appears in record CSV (the schema
// above is the complete wire format); verification summaries surface it as
// the note "swapped (erratum)".

#pragma once

#include <charconv>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <system_error>
#include <vector>

#include <json.hpp>

#include "bounds.hpp"
#include "generate.hpp"
#include "indices.hpp"
#include "verify.hpp"

namespace sombor {

// --- number formatting --------------------------------------------------------

/// 12-significant-digit decimal rendering (printf %g style: trailing zeros
/// trimmed, scientific notation for extreme magnitudes), locale-independent.
inline std::string format_double(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, 12);
  return std::string(buf, res.ptr);
}

/// Strict counterpart of format_double: the whole string must be one number.
inline double parse_double(std::string_view s) {
  double v = 0;
  const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (res.ec != std::errc() || res.ptr != s.data() + s.size())
    throw std::invalid_argument("not a number: '" + std::string(s) + "'");
  return v;
}

/// Round a value through the 12-digit formatter, for JSON number fields that
/// must mirror the CSV rendering.
inline double round_to_report_precision(double v) { return parse_double(format_double(v)); }

namespace detail {

inline const char* bool_token(bool b) { return b ? "true" : "false"; }

inline bool parse_bool_token(std::string_view s) {
  if (s == "true") return true;
  if (s == "false") return false;
  throw std::invalid_argument("not a boolean: '" + std::string(s) + "'");
}

inline long long parse_int_token(std::string_view s) {
  long long v = 0;
  const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (res.ec != std::errc() || res.ptr != s.data() + s.size())
    throw std::invalid_argument("not an integer: '" + std::string(s) + "'");
  return v;
}

inline BoundDirection parse_direction_token(std::string_view s) {
  if (s == "<=") return BoundDirection::LessEq;
  if (s == ">=") return BoundDirection::GreaterEq;
  if (s == "<") return BoundDirection::StrictLess;
  throw std::invalid_argument("not a direction: '" + std::string(s) + "'");
}

inline std::vector<std::string_view> split_csv_line(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = line.find(',', start);
    if (comma == std::string_view::npos) {
      fields.push_back(line.substr(start));
      return fields;
    }
    fields.push_back(line.substr(start, comma - start));
    start = comma + 1;
  }
}

}  // namespace detail

// --- bound-check record CSV -----------------------------------------------------

inline constexpr const char* kRecordCsvHeader =
    "bound_id,alpha,n,m,graph6,lhs,rhs,direction,slack,holds,eq_pred,eq_obs";

inline std::string record_csv_row(const RecordedCheck& r) {
  const BoundCheck& c = r.check;
  std::string row;
  row += c.bound_id;
  row += ',';
  if (c.alpha) row += format_double(*c.alpha);
  row += ',';
  row += std::to_string(r.n);
  row += ',';
  row += std::to_string(r.m);
  row += ',';
  row += r.graph6;
  row += ',';
  row += format_double(c.lhs);
  row += ',';
  row += format_double(c.rhs);
  row += ',';
  row += direction_symbol(c.direction);
  row += ',';
  row += format_double(c.slack);
  row += ',';
  row += detail::bool_token(c.holds);
  row += ',';
  row += detail::bool_token(c.equality_predicted);
  row += ',';
  row += detail::bool_token(c.equality_observed);
  return row;
}

/// Parse a record CSV document (header line required).  graph_index is the
/// row's position; the swapped flag is not part of the wire format and stays
/// false.  Throws std::invalid_argument naming the 1-based line on any
/// malformed content.
inline std::vector<RecordedCheck> parse_record_csv(std::string_view text) {
  std::vector<RecordedCheck> out;
  std::size_t pos = 0, line_no = 0;
  while (pos < text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    pos = eol + 1;
    ++line_no;
    if (line_no == 1) {
      if (line != kRecordCsvHeader)
        throw std::invalid_argument("record csv line 1: unexpected header");
      continue;
    }
    if (line.empty()) continue;
    const auto f = detail::split_csv_line(line);
    const std::string where = "record csv line " + std::to_string(line_no) + ": ";
    if (f.size() != 12) throw std::invalid_argument(where + "expected 12 fields");
    try {
      RecordedCheck r;
      r.graph_index = static_cast<long long>(out.size());
      r.check.bound_id = std::string(f[0]);
      if (!f[1].empty()) r.check.alpha = parse_double(f[1]);
      r.n = static_cast<int>(detail::parse_int_token(f[2]));
      r.m = detail::parse_int_token(f[3]);
      r.graph6 = std::string(f[4]);
      r.check.lhs = parse_double(f[5]);
      r.check.rhs = parse_double(f[6]);
      r.check.direction = detail::parse_direction_token(f[7]);
      r.check.slack = parse_double(f[8]);
      r.check.holds = detail::parse_bool_token(f[9]);
      r.check.equality_predicted = detail::parse_bool_token(f[10]);
      r.check.equality_observed = detail::parse_bool_token(f[11]);
      out.push_back(std::move(r));
    } catch (const std::invalid_argument& e) {
      throw std::invalid_argument(where + e.what());
    }
  }
  if (line_no == 0) throw std::invalid_argument("record csv line 1: missing header");
  return out;
}

inline nlohmann::ordered_json record_json(const RecordedCheck& r) {
  const BoundCheck& c = r.check;
  nlohmann::ordered_json j;
  j["bound_id"] = c.bound_id;
  if (c.alpha)
    j["alpha"] = round_to_report_precision(*c.alpha);
  else
    j["alpha"] = nullptr;
  j["n"] = r.n;
  j["m"] = r.m;
  j["graph6"] = r.graph6;
  j["lhs"] = round_to_report_precision(c.lhs);
  j["rhs"] = round_to_report_precision(c.rhs);
  j["direction"] = direction_symbol(c.direction);
  j["slack"] = round_to_report_precision(c.slack);
  j["holds"] = c.holds;
  j["eq_pred"] = c.equality_predicted;
  j["eq_obs"] = c.equality_observed;
  return j;
}

// --- verification documents -----------------------------------------------------

inline constexpr const char* kSwappedNote = "swapped (erratum)";

/// Record rows of a verification run: per report (canonical order), the
/// violations — and, when include_witnesses, the equality witnesses — merged
/// in corpus order.  Byte-deterministic; no timing data.
inline std::string verify_csv(const std::vector<EnumerationReport>& reports,
                              bool include_witnesses) {
  std::string out = kRecordCsvHeader;
  out += '\n';
  for (const auto& report : reports) {
    std::size_t vi = 0, wi = 0;
    while (vi < report.violations.size() ||
           (include_witnesses && wi < report.equality_witnesses.size())) {
      const bool take_violation =
          vi < report.violations.size() &&
          (!include_witnesses || wi >= report.equality_witnesses.size() ||
           report.violations[vi].graph_index < report.equality_witnesses[wi].graph_index);
      out += record_csv_row(take_violation ? report.violations[vi++]
                                           : report.equality_witnesses[wi++]);
      out += '\n';
    }
  }
  return out;
}

/// JSON mirror of a verification run: per-report summaries with violation
/// records (always) and witness records (when requested).  Timing is
/// deliberately excluded so the document is byte-deterministic.
inline nlohmann::ordered_json verify_json(const std::vector<EnumerationReport>& reports,
                                          bool include_witnesses) {
  nlohmann::ordered_json doc;
  doc["reports"] = nlohmann::ordered_json::array();
  for (const auto& report : reports) {
    nlohmann::ordered_json j;
    j["bound_id"] = report.bound_id;
    if (report.alpha)
      j["alpha"] = round_to_report_precision(*report.alpha);
    else
      j["alpha"] = nullptr;
    if (report.swapped) j["note"] = kSwappedNote;
    j["graphs_checked"] = report.graphs_checked;
    j["violation_count"] = static_cast<long long>(report.violations.size());
    j["equality_witness_count"] = static_cast<long long>(report.equality_witnesses.size());
    j["violations"] = nlohmann::ordered_json::array();
    for (const auto& r : report.violations) j["violations"].push_back(record_json(r));
    if (include_witnesses) {
      j["equality_witnesses"] = nlohmann::ordered_json::array();
      for (const auto& r : report.equality_witnesses)
        j["equality_witnesses"].push_back(record_json(r));
    }
    doc["reports"].push_back(std::move(j));
  }
  return doc;
}

/// One human-readable summary line per report (for logs / stderr, not part of
/// the deterministic output contract).
inline std::string report_summary_line(const EnumerationReport& report) {
  std::string line = report.bound_id;
  if (report.alpha) {
    line += " alpha=";
    line += format_double(*report.alpha);
  }
  if (report.swapped) {
    line += " [";
    line += kSwappedNote;
    line += ']';
  }
  line += ": graphs=" + std::to_string(report.graphs_checked);
  line += " violations=" + std::to_string(report.violations.size());
  line += " equality_witnesses=" + std::to_string(report.equality_witnesses.size());
  return line;
}

// --- index tables ----------------------------------------------------------------

inline constexpr const char* kIndexCsvHeader = "graph_index,graph6,n,m,index,param,value";

/// One index value of one input graph.
struct IndexRow {
  long long graph_index = 0;
  std::string graph6;
  int n = 0;
  long long m = 0;
  IndexValue value;
};

/// Rows for one graph in the pinned order (fixed indices once, parameterized
/// ones per grid value).
inline std::vector<IndexRow> index_rows(const Graph& g, long long graph_index,
                                        const AlphaGrid& grid) {
  std::vector<IndexRow> rows;
  const std::string g6 = serialize_graph6(g);
  for (auto& v : all_index_values(g, grid))
    rows.push_back({graph_index, g6, g.vertex_count(), g.edge_count(), v});
  return rows;
}

inline std::string index_csv(const std::vector<IndexRow>& rows) {
  std::string out = kIndexCsvHeader;
  out += '\n';
  for (const auto& r : rows) {
    out += std::to_string(r.graph_index);
    out += ',';
    out += r.graph6;
    out += ',';
    out += std::to_string(r.n);
    out += ',';
    out += std::to_string(r.m);
    out += ',';
    out += index_id_name(r.value.id);
    out += ',';
    if (r.value.param) out += format_double(*r.value.param);
    out += ',';
    out += format_double(r.value.value);
    out += '\n';
  }
  return out;
}

inline nlohmann::ordered_json index_json(const std::vector<IndexRow>& rows) {
  nlohmann::ordered_json doc;
  doc["rows"] = nlohmann::ordered_json::array();
  for (const auto& r : rows) {
    nlohmann::ordered_json j;
    j["graph_index"] = r.graph_index;
    j["graph6"] = r.graph6;
    j["n"] = r.n;
    j["m"] = r.m;
    j["index"] = index_id_name(r.value.id);
    if (r.value.param)
      j["param"] = round_to_report_precision(*r.value.param);
    else
      j["param"] = nullptr;
    j["value"] = round_to_report_precision(r.value.value);
    doc["rows"].push_back(std::move(j));
  }
  return doc;
}

// --- closed-form comparison (families) --------------------------------------------

inline constexpr const char* kFamilyCsvHeader =
    "family,n,alpha,closed_form,direct,abs_diff,paper_variant,paper_abs_diff,note";

/// Closed form vs direct computation for one family at one exponent.  For
/// paths the widely printed interior-edge variant is carried alongside the
/// corrected one; note = "erratum" whenever it misses the direct value.
struct FamilyRow {
  std::string family;
  int n = 0;
  double alpha = 0;
  double closed_form = 0;
  double direct = 0;
  double abs_diff = 0;
  std::optional<double> paper_variant;
  std::optional<double> paper_abs_diff;
  std::string note;
};

/// Families with a closed form: complete, cycle, path, empty.  Throws
/// std::invalid_argument on other names or out-of-range n (cycle needs
/// n >= 3, path n >= 2, the others n >= 1).
inline std::vector<FamilyRow> family_rows(const std::string& family, int n,
                                          const AlphaGrid& grid) {
  Graph g = [&] {
    if (family == "complete") return make_complete(n);
    if (family == "cycle") return make_cycle(n);
    if (family == "path") {
      if (n < 2) throw std::invalid_argument("family path: n must be at least 2");
      return make_path(n);
    }
    if (family == "empty") return make_empty(n);
    throw std::invalid_argument("unknown family: " + family +
                                " (closed forms exist for complete, cycle, path, empty)");
  }();
  std::vector<FamilyRow> rows;
  for (double a : grid) {
    FamilyRow row;
    row.family = family;
    row.n = n;
    row.alpha = a;
    if (family == "complete")
      row.closed_form = complete_sombor_closed_form(n, a);
    else if (family == "cycle")
      row.closed_form = cycle_sombor_closed_form(n, a);
    else if (family == "path")
      row.closed_form = path_sombor_closed_form(n, a, PathVariant::Corrected);
    else
      row.closed_form = 0.0;
    row.direct = general_sombor(g, a);
    row.abs_diff = std::fabs(row.closed_form - row.direct);
    if (family == "path") {
      row.paper_variant = path_sombor_closed_form(n, a, PathVariant::Paper);
      row.paper_abs_diff = std::fabs(*row.paper_variant - row.direct);
      if (*row.paper_abs_diff > bound_tolerance(*row.paper_variant, row.direct))
        row.note = "erratum";
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

inline std::string family_csv(const std::vector<FamilyRow>& rows) {
  std::string out = kFamilyCsvHeader;
  out += '\n';
  for (const auto& r : rows) {
    out += r.family;
    out += ',';
    out += std::to_string(r.n);
    out += ',';
    out += format_double(r.alpha);
    out += ',';
    out += format_double(r.closed_form);
    out += ',';
    out += format_double(r.direct);
    out += ',';
    out += format_double(r.abs_diff);
    out += ',';
    if (r.paper_variant) out += format_double(*r.paper_variant);
    out += ',';
    if (r.paper_abs_diff) out += format_double(*r.paper_abs_diff);
    out += ',';
    out += r.note;
    out += '\n';
  }
  return out;
}

inline nlohmann::ordered_json family_json(const std::vector<FamilyRow>& rows) {
  nlohmann::ordered_json doc;
  doc["rows"] = nlohmann::ordered_json::array();
  for (const auto& r : rows) {
    nlohmann::ordered_json j;
    j["family"] = r.family;
    j["n"] = r.n;
    j["alpha"] = round_to_report_precision(r.alpha);
    j["closed_form"] = round_to_report_precision(r.closed_form);
    j["direct"] = round_to_report_precision(r.direct);
    j["abs_diff"] = round_to_report_precision(r.abs_diff);
    j["paper_variant"] =
        r.paper_variant ? nlohmann::ordered_json(round_to_report_precision(*r.paper_variant))
                        : nlohmann::ordered_json(nullptr);
    j["paper_abs_diff"] =
        r.paper_abs_diff ? nlohmann::ordered_json(round_to_report_precision(*r.paper_abs_diff))
                         : nlohmann::ordered_json(nullptr);
    j["note"] = r.note;
    doc["rows"].push_back(std::move(j));
  }
  return doc;
}

}  // namespace sombor

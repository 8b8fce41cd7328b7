#pragma once

// Text, CSV and JSON rendering of engine results.
//
// Numbers in CSV and JSON use the shortest representation that parses back
// to the same double; human-readable text uses six decimals.

#include "bibaz/audit.hpp"
#include "bibaz/extremal.hpp"
#include "bibaz/findings.hpp"
#include "bibaz/grid.hpp"
#include "bibaz/verify.hpp"

#include "json.hpp"

#include <charconv>
#include <cstdio>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

namespace bibaz {

inline constexpr const char* engine_version = "1.0.0";

using Json = nlohmann::ordered_json;

inline std::string shortest(double x) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
  return ec == std::errc{} ? std::string(buf, ptr) : std::string("nan");
}

inline std::string fixed6(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", x);
  std::string s(buf);
  return s == "-0.000000" ? "0.000000" : s;
}

inline double parse_double(std::string_view s) {
  double v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size()) throw InvalidParameter("not a number: " + std::string(s));
  return v;
}

inline std::string complex_text(const Complex<double>& z, bool fixed) {
  auto f = [fixed](double v) { return fixed ? fixed6(v) : shortest(v); };
  if (z.im == 0) return f(z.re);
  return f(z.re) + (std::signbit(z.im) ? "-" : "+") + f(std::fabs(z.im)) + "i";
}

inline std::string tuple_text(const CaratheodoryTuple<double>& t, bool fixed) {
  return "p1=" + complex_text(t.p1, fixed) + " p2=" + complex_text(t.p2, fixed) + " h1=" + complex_text(t.h1, fixed) +
         " h2=" + complex_text(t.h2, fixed);
}

// ---------------------------------------------------------------- φ labels

inline std::string phi_params_text(const PhiSpec<double>& spec) {
  if (const auto* g = std::get_if<phi::Generic<double>>(&spec)) return "B1=" + shortest(g->b1) + ";B2=" + shortest(g->b2);
  if (const auto* j = std::get_if<phi::Janowski<double>>(&spec)) return "A=" + shortest(j->a) + ";B=" + shortest(j->b);
  return "zeta=" + shortest(std::get<phi::OrderZeta<double>>(spec).zeta);
}

/// Inverse of family_name + phi_params_text.
inline PhiSpec<double> parse_phi(std::string_view family, std::string_view params) {
  std::vector<std::pair<std::string, double>> kv;
  std::size_t from = 0;
  while (from <= params.size()) {
    const auto semi = params.find(';', from);
    const auto item = params.substr(from, semi == std::string_view::npos ? std::string_view::npos : semi - from);
    const auto eq = item.find('=');
    if (eq == std::string_view::npos) throw InvalidParameter("bad phi_params: " + std::string(params));
    kv.emplace_back(std::string(item.substr(0, eq)), parse_double(item.substr(eq + 1)));
    if (semi == std::string_view::npos) break;
    from = semi + 1;
  }
  auto get = [&](const char* key) {
    for (const auto& [k, v] : kv)
      if (k == key) return v;
    throw InvalidParameter(std::string("phi_params missing ") + key);
  };
  if (family == "generic") return phi::Generic<double>{get("B1"), get("B2")};
  if (family == "janowski") return phi::Janowski<double>{get("A"), get("B")};
  if (family == "zeta") return phi::OrderZeta<double>{get("zeta")};
  throw InvalidParameter("unknown phi family: " + std::string(family));
}

// ---------------------------------------------------------------- run report

struct RunCounts {
  std::size_t evaluated = 0;
  std::size_t degenerate = 0;
  std::size_t errors = 0;
  std::size_t total() const { return evaluated + degenerate + errors; }
};

struct RunReport {
  std::string command;
  std::string version = engine_version;
  RunCounts counts;
  Findings findings;
};

inline std::string command_echo(int argc, const char* const* argv) {
  std::string out = "bibaz";
  for (int i = 1; i < argc; ++i) {
    out += ' ';
    out += argv[i];
  }
  return out;
}

inline Json to_json(const Finding& f) {
  return Json{{"id", f.id}, {"location", f.location}, {"printed", f.printed}, {"derived", f.derived}, {"witness", f.witness}};
}

inline Json to_json(const RunReport& r) {
  Json findings = Json::array();
  for (const auto& f : r.findings) findings.push_back(to_json(f));
  return Json{{"command", r.command},
              {"engine_version", r.version},
              {"counts",
               {{"evaluated", r.counts.evaluated},
                {"degenerate", r.counts.degenerate},
                {"errors", r.counts.errors},
                {"total", r.counts.total()}}},
              {"findings", std::move(findings)}};
}

inline std::string dump(const Json& j) { return j.dump(2) + "\n"; }

// ---------------------------------------------------------------- bound rows

inline const std::vector<std::string>& table_columns() {
  static const std::vector<std::string> cols = {"k",          "alpha",      "beta",     "lambda", "delta",
                                                "gamma",      "phi_family", "phi_params", "B1",   "B2",
                                                "a2_bound",   "a3_bound",   "denom",    "flags"};
  return cols;
}

inline constexpr const char* evaluation_error_flag = "evaluation_error";

inline std::vector<std::string> row_flags(const GridRow& row) {
  auto flags = row.result.flags;
  if (row.error) flags.emplace_back(evaluation_error_flag);
  return flags;
}

inline RunCounts count_rows(const std::vector<GridRow>& rows) {
  RunCounts c;
  for (const auto& r : rows) {
    if (r.error)
      ++c.errors;
    else if (r.result.degenerate)
      ++c.degenerate;
    else
      ++c.evaluated;
  }
  return c;
}

inline std::vector<std::string> row_cells(const GridRow& row) {
  const auto& p = row.point.params;
  const auto& r = row.result;
  auto opt = [](const std::optional<double>& v) { return v ? shortest(*v) : std::string(); };
  std::string flags;
  for (const auto& f : row_flags(row)) flags += (flags.empty() ? "" : ";") + f;
  return {std::to_string(p.k),
          shortest(p.alpha),
          shortest(p.beta),
          shortest(p.lambda),
          shortest(p.delta),
          shortest(p.gamma),
          family_name(row.point.phi),
          phi_params_text(row.point.phi),
          row.error ? std::string() : shortest(r.b1),
          row.error ? std::string() : shortest(r.b2),
          opt(r.a2_bound),
          opt(r.a3_bound),
          row.error ? std::string() : shortest(r.denom_value),
          flags};
}

inline std::string csv_escape(const std::string& cell) {
  if (cell.find_first_of(",\"\n") == std::string::npos) return cell;
  std::string out = "\"";
  for (char c : cell) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

inline std::string csv_line(const std::vector<std::string>& cells) {
  std::string out;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) out += ',';
    out += csv_escape(cells[i]);
  }
  return out + "\n";
}

inline std::string rows_csv(const std::vector<GridRow>& rows) {
  std::string out = csv_line(table_columns());
  for (const auto& r : rows) out += csv_line(row_cells(r));
  return out;
}

inline Json row_json(const GridRow& row) {
  const auto& p = row.point.params;
  const auto& r = row.result;
  auto opt = [](const std::optional<double>& v) { return v ? Json(*v) : Json(nullptr); };
  auto num = [&](double v) { return row.error ? Json(nullptr) : Json(v); };
  Json flags = Json::array();
  for (const auto& f : row_flags(row)) flags.push_back(f);
  Json j = {{"k", p.k},
            {"alpha", p.alpha},
            {"beta", p.beta},
            {"lambda", p.lambda},
            {"delta", p.delta},
            {"gamma", p.gamma},
            {"phi_family", family_name(row.point.phi)},
            {"phi_params", phi_params_text(row.point.phi)},
            {"B1", num(r.b1)},
            {"B2", num(r.b2)},
            {"a2_bound", opt(r.a2_bound)},
            {"a3_bound", opt(r.a3_bound)},
            {"denom", num(r.denom_value)},
            {"flags", std::move(flags)}};
  if (r.printed_denom) j["printed_denom"] = *r.printed_denom;
  return j;
}

inline Json rows_json(const RunReport& meta, const std::vector<GridRow>& rows) {
  Json arr = Json::array();
  for (const auto& r : rows) arr.push_back(row_json(r));
  return Json{{"meta", to_json(meta)}, {"rows", std::move(arr)}};
}

/// Human rendering of a single bound evaluation.
inline std::string bounds_text(const GridRow& row) {
  const auto& r = row.result;
  std::ostringstream os;
  os << "a2=" << (r.a2_bound ? fixed6(*r.a2_bound) : "") << "\n";
  os << "a3=" << (r.a3_bound ? fixed6(*r.a3_bound) : "") << "\n";
  os << "denom=" << fixed6(r.denom_value) << "\n";
  os << "B1=" << fixed6(r.b1) << " B2=" << fixed6(r.b2) << "\n";
  if (r.printed_denom) os << "printed_denom=" << fixed6(*r.printed_denom) << "\n";
  os << "flags=" << r.flags_joined(';') << "\n";
  return os.str();
}

// ---------------------------------------------------------------- CSV parsing

struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  std::size_t column(const std::string& name) const {
    for (std::size_t i = 0; i < header.size(); ++i)
      if (header[i] == name) return i;
    throw InvalidParameter("no CSV column " + name);
  }
};

inline CsvTable parse_csv(std::string_view text) {
  CsvTable t;
  std::vector<std::string> record;
  std::string cell;
  bool quoted = false, any = false;
  auto end_record = [&] {
    record.push_back(std::move(cell));
    cell.clear();
    if (t.header.empty())
      t.header = std::move(record);
    else
      t.rows.push_back(std::move(record));
    record.clear();
    any = false;
  };
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (quoted) {
      if (c == '"' && i + 1 < text.size() && text[i + 1] == '"') {
        cell += '"';
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        cell += c;
      }
      continue;
    }
    any = true;
    if (c == '"')
      quoted = true;
    else if (c == ',') {
      record.push_back(std::move(cell));
      cell.clear();
    } else if (c == '\n')
      end_record();
    else if (c != '\r')
      cell += c;
  }
  if (quoted) throw InvalidParameter("unterminated quoted CSV cell");
  if (any) end_record();
  return t;
}

/// Rebuilds the grid point a CSV row describes.
inline GridPoint point_from_csv(const CsvTable& t, const std::vector<std::string>& row) {
  auto cell = [&](const char* name) { return row.at(t.column(name)); };
  GridPoint pt{{}, phi::Generic<double>{1, 0}};
  pt.params.k = static_cast<int>(parse_double(cell("k")));
  pt.params.alpha = parse_double(cell("alpha"));
  pt.params.beta = parse_double(cell("beta"));
  pt.params.lambda = parse_double(cell("lambda"));
  pt.params.delta = parse_double(cell("delta"));
  pt.params.gamma = parse_double(cell("gamma"));
  pt.phi = parse_phi(cell("phi_family"), cell("phi_params"));
  return pt;
}

// ---------------------------------------------------------------- audit

inline Json to_json(const AuditEntry& e) {
  auto opt = [](const std::optional<double>& v) { return v ? Json(*v) : Json(nullptr); };
  const auto& w = e.witness;
  return Json{{"id", e.corollary_id},
              {"regime", e.regime},
              {"status", to_string(e.status)},
              {"a2_status", to_string(e.a2_status)},
              {"a3_status", to_string(e.a3_status)},
              {"samples", e.samples},
              {"resampled", e.resampled},
              {"a2_mismatches", e.a2_mismatches},
              {"a3_mismatches", e.a3_mismatches},
              {"witness",
               {{"params", w.params},
                {"phi", w.phi},
                {"printed_a2", opt(w.printed_a2)},
                {"derived_a2", w.derived_a2},
                {"printed_a3", opt(w.printed_a3)},
                {"derived_a3", w.derived_a3},
                {"a2_match", w.a2_match},
                {"a3_match", w.a3_match}}}};
}

inline Json audit_json(const RunReport& meta, const std::vector<AuditEntry>& entries) {
  Json arr = Json::array();
  for (const auto& e : entries) arr.push_back(to_json(e));
  return Json{{"meta", to_json(meta)}, {"entries", std::move(arr)}};
}

inline std::string audit_text(const std::vector<AuditEntry>& entries) {
  auto opt = [](const std::optional<double>& v) { return v ? fixed6(*v) : std::string("undefined"); };
  std::ostringstream os;
  std::size_t mismatches = 0;
  for (const auto& e : entries) {
    if (e.status == AuditStatus::Mismatch) ++mismatches;
    const auto& w = e.witness;
    os << e.corollary_id << "  " << to_string(e.status) << "  a2=" << to_string(e.a2_status) << " ("
       << e.a2_mismatches << "/" << e.samples << ")"
       << "  a3=" << to_string(e.a3_status) << " (" << e.a3_mismatches << "/" << e.samples << ")\n";
    os << "    regime: " << e.regime << "\n";
    os << "    witness: " << w.params << " " << w.phi << "\n";
    os << "    printed a2=" << opt(w.printed_a2) << " a3=" << opt(w.printed_a3) << "   derived a2=" << fixed6(w.derived_a2)
       << " a3=" << fixed6(w.derived_a3) << "\n";
  }
  os << "summary: " << entries.size() << " entries, " << entries.size() - mismatches << " MATCH, " << mismatches
     << " MISMATCH\n";
  return os.str();
}

// ---------------------------------------------------------------- verify

inline Json to_json(const VerifyReport& r) {
  Json suites = Json::array();
  for (const auto& s : r.suites) suites.push_back({{"name", s.name}, {"checked", s.checked}, {"failures", s.failures}});
  Json failures = Json::array();
  for (const auto& f : r.failures) failures.push_back({{"suite", f.suite}, {"input", f.input}, {"detail", f.detail}});
  return Json{{"draws", r.draws},
              {"seed", r.seed},
              {"passed", r.passed()},
              {"suites", std::move(suites)},
              {"failures", std::move(failures)}};
}

inline RunCounts verify_counts(const VerifyReport& r) {
  RunCounts c;
  for (const auto& s : r.suites) {
    c.evaluated += static_cast<std::size_t>(s.checked - s.failures);
    c.errors += static_cast<std::size_t>(s.failures);
  }
  return c;
}

inline std::string verify_text(const VerifyReport& r) {
  std::ostringstream os;
  for (const auto& s : r.suites) os << s.name << ": checked=" << s.checked << " failures=" << s.failures << "\n";
  for (const auto& f : r.failures) os << "FAILURE [" << f.suite << "] " << f.input << "\n    " << f.detail << "\n";
  for (const auto& f : r.findings)
    os << "finding " << f.id << ": " << f.location << "\n    printed: " << f.printed << "\n    derived: " << f.derived
       << "\n    witness: " << f.witness << "\n";
  os << (r.passed() ? "PASS" : "FAIL") << " (" << r.failures.size() << " nonzero residuals)\n";
  return os.str();
}

// ---------------------------------------------------------------- extremal

inline Json to_json(const CaratheodoryTuple<double>& t) {
  auto c = [](const Complex<double>& z) { return Json::array({z.re, z.im}); };
  return Json{{"p1", c(t.p1)}, {"p2", c(t.p2)}, {"h1", c(t.h1)}, {"h2", c(t.h2)}};
}

inline Json to_json(const ExtremalReport& r) {
  Json j = {{"target", to_string(r.target)},
            {"searched_max", r.searched_max},
            {"formula_bound", r.formula_bound},
            {"gap", r.gap},
            {"argmax", to_json(r.argmax)},
            {"attained_on_corner", r.attained_on_corner},
            {"candidates", r.candidates}};
  if (r.strict_max) {
    j["strict_max"] = *r.strict_max;
    j["strict_argmax"] = to_json(*r.strict_argmax);
  }
  return j;
}

inline std::string extremal_text(const ExtremalReport& r) {
  std::ostringstream os;
  os << "target=" << to_string(r.target) << "\n";
  os << "searched_max=" << fixed6(r.searched_max) << "\n";
  os << "formula_bound=" << fixed6(r.formula_bound) << "\n";
  os << "gap=" << fixed6(r.gap) << "\n";
  os << "argmax=" << tuple_text(r.argmax, true) << "\n";
  os << "attained_on_corner=" << (r.attained_on_corner ? "yes" : "no") << "\n";
  os << "candidates=" << r.candidates << "\n";
  if (r.strict_max) {
    os << "strict_max=" << fixed6(*r.strict_max) << "\n";
    os << "strict_argmax=" << tuple_text(*r.strict_argmax, true) << "\n";
  }
  return os.str();
}

}  // namespace bibaz

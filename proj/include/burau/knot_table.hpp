#pragma once

// Knot table: CSV rows `name,strands,word`, each checked against both oracles.

#include "burau/invariants.hpp"
#include "burau/json_io.hpp"
#include "burau/oracles.hpp"

#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace burau {

struct KnotTableEntry {
  std::string name;
  int strands = 1;
  std::string word;
  int line = 0;
};

/// One parsed row or the reason it could not be parsed.
struct TableRow {
  std::optional<KnotTableEntry> entry;
  int line = 0;
  std::string error;
};

namespace detail {
inline std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}
}  // namespace detail

/// Blank lines and lines starting with '#' are skipped, as is a leading
/// `name,strands,word` header. The word field may be empty (trivial braid).
inline std::vector<TableRow> parse_knot_table(std::istream& in) {
  std::vector<TableRow> rows;
  std::string raw;
  int line = 0;
  bool first = true;
  while (std::getline(in, raw)) {
    ++line;
    const std::string text = detail::trim(raw);
    if (text.empty() || text.front() == '#') continue;
    if (first && text.rfind("name,", 0) == 0) {
      first = false;
      continue;
    }
    first = false;
    TableRow row;
    row.line = line;
    const auto c1 = text.find(',');
    const auto c2 = c1 == std::string::npos ? std::string::npos : text.find(',', c1 + 1);
    if (c2 == std::string::npos) {
      row.error = "expected name,strands,word";
      rows.push_back(row);
      continue;
    }
    KnotTableEntry e;
    e.line = line;
    e.name = detail::trim(text.substr(0, c1));
    e.word = detail::trim(text.substr(c2 + 1));
    const std::string strands = detail::trim(text.substr(c1 + 1, c2 - c1 - 1));
    try {
      std::size_t used = 0;
      e.strands = std::stoi(strands, &used);
      if (used != strands.size()) throw std::invalid_argument("trailing characters");
      if (e.strands < 1) throw std::invalid_argument("must be positive");
      parse_braid(e.word, e.strands);
      row.entry = e;
    } catch (const std::exception& ex) {
      row.error = ex.what();
    }
    rows.push_back(row);
  }
  return rows;
}

/// s = A^exponent, times component_sign^(components - 1): the map taking the
/// enhanced-trace Jones polynomial (in s = t^{1/2}) to the writhe-normalized
/// bracket.
struct JonesIdentification {
  int exponent = 0;
  int component_sign = 1;

  LaurentPoly to_bracket(const JonesPolynomial& v, int components) const {
    const LaurentPoly p = v.in_sqrt_t.substitute_power(exponent);
    return (components % 2 == 0 && component_sign < 0) ? -p : p;
  }
};

/// The exponent is fixed by the right-handed trefoil τ_1^3, the sign by the
/// two-component unlink; nullopt if no candidate matches.
inline std::optional<JonesIdentification> match_jones_identification() {
  const BraidWord trefoil(2, {1, 1, 1});
  const BraidWord unlink = BraidWord::identity(2);
  for (int k : {2, -2})
    for (int sign : {1, -1}) {
      const JonesIdentification id{k, sign};
      if (id.to_bracket(jones(trefoil), 1) == oracle::normalized_bracket(trefoil) &&
          id.to_bracket(jones(unlink), 2) == oracle::normalized_bracket(unlink))
        return id;
    }
  return std::nullopt;
}

inline const JonesIdentification& frozen_jones_identification() {
  static const JonesIdentification id = [] {
    auto m = match_jones_identification();
    if (!m) throw std::logic_error("jones: no variable identification matches the trefoil and unlink");
    return *m;
  }();
  return id;
}

struct KnotReport {
  KnotTableEntry entry;
  int components = 0;
  JonesPolynomial jones_value;
  LaurentPoly bracket;
  bool jones_match = false;
  std::optional<LaurentPoly> alexander_value;  // knots only
  std::optional<LaurentPoly> fox;
  bool alexander_match = true;

  bool ok() const { return jones_match && alexander_match; }
};

inline KnotReport check_knot(const KnotTableEntry& e) {
  KnotReport r;
  r.entry = e;
  const BraidWord b = parse_braid(e.word, e.strands);
  r.components = closure_components(b);
  r.jones_value = jones(b);
  r.bracket = oracle::normalized_bracket(b);
  r.jones_match = frozen_jones_identification().to_bracket(r.jones_value, r.components) == r.bracket;
  if (r.components == 1) {
    r.alexander_value = alexander(b);
    r.fox = oracle::fox_alexander(b);
    r.alexander_match = *r.alexander_value == *r.fox;
  }
  return r;
}

inline json to_json(const KnotReport& r) {
  json j{{"name", r.entry.name},
         {"strands", r.entry.strands},
         {"word", r.entry.word},
         {"components", r.components},
         {"bracket", to_json(r.bracket, "A")},
         {"jones_match", r.jones_match},
         {"alexander", nullptr},
         {"fox", nullptr},
         {"alexander_match", r.alexander_match},
         {"ok", r.ok()}};
  if (auto in_t = r.jones_value.in_t())
    j["jones"] = to_json(*in_t, "t");
  else
    j["jones"] = to_json(r.jones_value.in_sqrt_t, "t^(1/2)");
  if (r.alexander_value) j["alexander"] = to_json(*r.alexander_value);
  if (r.fox) j["fox"] = to_json(*r.fox);
  return j;
}

struct TableSummary {
  int rows = 0;
  int mismatches = 0;
  int row_errors = 0;

  int exit_code() const { return mismatches == 0 && row_errors == 0 ? 0 : 1; }
};

/// One line per row (JSON or text). Row errors are reported and the run continues.
inline TableSummary run_table(std::istream& in, std::ostream& out, bool as_json) {
  TableSummary s;
  for (const TableRow& row : parse_knot_table(in)) {
    ++s.rows;
    std::string error = row.error;
    std::optional<KnotReport> report;
    if (row.entry) {
      try {
        report = check_knot(*row.entry);
      } catch (const std::exception& ex) {
        error = ex.what();
      }
    }
    if (!report) {
      ++s.row_errors;
      const std::string name = row.entry ? row.entry->name : std::string{};
      if (as_json)
        out << json{{"line", row.line}, {"name", name}, {"error", error}}.dump() << '\n';
      else
        out << "line " << row.line << ": ERROR " << error << '\n';
      continue;
    }
    if (!report->ok()) ++s.mismatches;
    if (as_json) {
      out << to_json(*report).dump() << '\n';
      continue;
    }
    out << report->entry.name << " [" << report->entry.strands << ": " << report->entry.word << "]"
        << (report->jones_match ? " jones OK" : " jones MISMATCH");
    if (report->alexander_value)
      out << (report->alexander_match ? " alexander OK" : " alexander MISMATCH") << "  Δ = "
          << report->alexander_value->to_string();
    if (auto in_t = report->jones_value.in_t()) out << "  V = " << in_t->to_string();
    out << '\n';
  }
  return s;
}

inline TableSummary run_table(const std::string& path, std::ostream& out, bool as_json) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read table: " + path);
  return run_table(in, out, as_json);
}

}  // namespace burau

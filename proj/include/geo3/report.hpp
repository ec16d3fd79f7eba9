// geo3/report.hpp — sampled-results tables and their three output formats.
//
// A SampleTable is the common shape every subcommand produces: a name, a list
// of key/value metadata pairs, and rows of cells under named columns. Writers:
//
//   text  — metadata as '# key: value' lines, then aligned columns
//   csv   — header row plus one sample per row, '.' decimal point, no metadata
//   json  — {"name": ..., "params": {...}, "samples": [{col: value, ...}]}
//
// Numbers are printed with the shortest round-trip representation so output is
// locale-independent and stable across runs.
#pragma once

#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "geo3/expr.hpp"

namespace geo3 {

struct Cell {
  std::string text;
  double value = 0.0;
  bool is_number = false;
};

inline Cell num_cell(double v) { return {detail::format_double(v), v, true}; }
inline Cell text_cell(std::string s) { return {std::move(s), 0.0, false}; }

struct SampleTable {
  std::string name;
  std::vector<std::pair<std::string, std::string>> params;
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;

  std::vector<Cell>& add_row() { return rows.emplace_back(); }
  void push(std::vector<Cell> row) { rows.push_back(std::move(row)); }
};

inline void write_text(const SampleTable& t, std::ostream& os) {
  os << "# " << t.name << "\n";
  for (const auto& [k, v] : t.params) os << "# " << k << ": " << v << "\n";
  if (t.columns.empty()) return;
  std::vector<std::size_t> width(t.columns.size());
  for (std::size_t c = 0; c < t.columns.size(); ++c) width[c] = t.columns[c].size();
  for (const auto& row : t.rows)
    for (std::size_t c = 0; c < row.size() && c < width.size(); ++c)
      width[c] = std::max(width[c], row[c].text.size());
  auto line = [&](auto&& cell_text) {
    for (std::size_t c = 0; c < t.columns.size(); ++c) {
      const std::string& s = cell_text(c);
      os << s;
      if (c + 1 < t.columns.size()) os << std::string(width[c] - s.size() + 2, ' ');
    }
    os << "\n";
  };
  line([&](std::size_t c) -> const std::string& { return t.columns[c]; });
  for (const auto& row : t.rows)
    line([&](std::size_t c) -> const std::string& {
      static const std::string empty;
      return c < row.size() ? row[c].text : empty;
    });
}

inline void write_csv(const SampleTable& t, std::ostream& os) {
  for (std::size_t c = 0; c < t.columns.size(); ++c)
    os << t.columns[c] << (c + 1 < t.columns.size() ? "," : "");
  os << "\n";
  for (const auto& row : t.rows) {
    for (std::size_t c = 0; c < t.columns.size(); ++c) {
      if (c < row.size()) os << row[c].text;
      if (c + 1 < t.columns.size()) os << ",";
    }
    os << "\n";
  }
}

inline void write_json(const SampleTable& t, std::ostream& os) {
  nlohmann::json j;
  j["name"] = t.name;
  j["params"] = nlohmann::json::object();
  for (const auto& [k, v] : t.params) j["params"][k] = v;
  j["samples"] = nlohmann::json::array();
  for (const auto& row : t.rows) {
    nlohmann::json s = nlohmann::json::object();
    for (std::size_t c = 0; c < row.size() && c < t.columns.size(); ++c) {
      if (row[c].is_number)
        s[t.columns[c]] = row[c].value;  // non-finite values serialize as null
      else
        s[t.columns[c]] = row[c].text;
    }
    j["samples"].push_back(std::move(s));
  }
  os << j.dump(2) << "\n";
}

enum class OutputFormat { table, csv, json };

inline void write_table(const SampleTable& t, OutputFormat f, std::ostream& os) {
  switch (f) {
    case OutputFormat::table: write_text(t, os); break;
    case OutputFormat::csv: write_csv(t, os); break;
    case OutputFormat::json: write_json(t, os); break;
  }
}

}  // namespace geo3

#include "dcecon/cli/report.hpp"

#include <algorithm>
#include <sstream>

namespace dcecon::cli {

Json RunReport::to_json() const {
  Json j;
  j["command"] = command;
  j["config"] = config;
  j["rows"] = rows;
  j["warnings"] = warnings;
  j["provenance"] = provenance;
  return j;
}

RunReport RunReport::from_json(const Json& j) {
  RunReport r;
  r.command = j.at("command").get<std::string>();
  r.config = j.at("config");
  for (const auto& row : j.at("rows")) r.rows.push_back(row);
  r.warnings = j.at("warnings").get<std::vector<std::string>>();
  r.provenance = j.at("provenance").get<std::string>();
  return r;
}

std::string RunReport::dump_json() const { return to_json().dump(2) + "\n"; }

namespace {

std::string csv_cell(const Json& v) {
  if (v.is_string()) {
    const auto s = v.get<std::string>();
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char c : s) {
      if (c == '"') q += '"';
      q += c;
    }
    return q + "\"";
  }
  if (v.is_null()) return "";
  return v.dump();
}

}  // namespace

std::string RunReport::dump_csv() const {
  std::ostringstream out;
  std::vector<std::string> columns;
  for (const auto& row : rows)
    for (const auto& [key, value] : row.items())
      if (value.is_primitive() && std::find(columns.begin(), columns.end(), key) == columns.end())
        columns.push_back(key);

  for (std::size_t i = 0; i < columns.size(); ++i) out << (i ? "," : "") << columns[i];
  out << "\n";
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < columns.size(); ++i) {
      if (i) out << ",";
      if (auto it = row.find(columns[i]); it != row.end() && it->is_primitive()) {
        out << csv_cell(*it);
      }
    }
    out << "\n";
  }
  return out.str();
}

}  // namespace dcecon::cli

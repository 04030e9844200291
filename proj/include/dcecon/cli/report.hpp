#pragma once

#include <string>
#include <vector>

#include "json.hpp"

namespace dcecon::cli {

using Json = nlohmann::ordered_json;

/// Result of one CLI run. JSON is the canonical encoding; the CSV view keeps
/// only scalar row fields.
struct RunReport {
  std::string command;              // echoed invocation
  Json config = Json::object();     // fully resolved, including seed
  std::vector<Json> rows;
  std::vector<std::string> warnings;
  std::string provenance;

  Json to_json() const;
  static RunReport from_json(const Json& j);

  std::string dump_json() const;
  std::string dump_csv() const;

  friend bool operator==(const RunReport&, const RunReport&) = default;
};

}  // namespace dcecon::cli

#pragma once

// CSV ingestion for the command-line front end.

#include <cstddef>
#include <filesystem>
#include <istream>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "dcecon/concentration.hpp"
#include "dcecon/optimizer.hpp"
#include "dcecon/prediction.hpp"
#include "dcecon/production.hpp"

namespace dcecon::cli {

struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
  std::vector<std::size_t> lines;  // 1-based source line of each row

  /// Index of a header column; throws ErrorCode::parse when missing.
  std::size_t column(std::string_view name) const;
};

/// Comma-separated, optional double-quoted fields, blank lines and lines
/// starting with '#' skipped. Every row must match the header width.
CsvTable read_csv(std::istream& in);
CsvTable read_csv_file(const std::filesystem::path& path);

/// Strict double parse; throws ErrorCode::parse naming the line.
double parse_number(std::string_view text, std::size_t line);
int parse_int(std::string_view text, std::size_t line);

inline constexpr std::string_view kCostHeader = "year,new_server_cost,power_cooling_cost";

/// Records sorted by year. Throws ErrorCode::parse for malformed rows and
/// ErrorCode::validation for empty input, duplicate years or bad costs.
std::vector<CostRecord> ingest_costs(std::istream& in);
std::vector<CostRecord> ingest_costs(const std::filesystem::path& path);

/// `year,w1,w2`
std::map<int, LinearWeights> ingest_weights(const std::filesystem::path& path);

/// `firm,share_percent[,included]`
MarketShares ingest_shares(std::istream& in);
MarketShares ingest_shares(const std::filesystem::path& path);

/// One inequality per row: coefficients followed by the bound b.
LinearConstraints ingest_constraints(const std::filesystem::path& path,
                                     std::size_t coefficient_count);

}  // namespace dcecon::cli

#include "dcecon/cli/io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <set>

#include "dcecon/error.hpp"

namespace dcecon::cli {

namespace {

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

[[noreturn]] void parse_fail(std::size_t line, const std::string& what) {
  detail::fail(ErrorCode::parse, "line " + std::to_string(line) + ": " + what);
}

std::vector<std::string> split_fields(const std::string& line, std::size_t line_no) {
  std::vector<std::string> out;
  std::string field;
  bool quoted = false;
  bool was_quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        field += '"';
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        field += c;
      }
    } else if (c == '"') {
      quoted = true;
      was_quoted = true;
    } else if (c == ',') {
      out.push_back(was_quoted ? field : trim(field));
      field.clear();
      was_quoted = false;
    } else {
      field += c;
    }
  }
  if (quoted) parse_fail(line_no, "unterminated quoted field");
  out.push_back(was_quoted ? field : trim(field));
  return out;
}

std::ifstream open(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) detail::fail(ErrorCode::validation, "cannot open '" + path.string() + "'");
  return in;
}

std::string join(const std::vector<std::string>& xs) {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) s += ',';
    s += xs[i];
  }
  return s;
}

}  // namespace

std::size_t CsvTable::column(std::string_view name) const {
  const auto it = std::find(header.begin(), header.end(), name);
  if (it == header.end()) {
    detail::fail(ErrorCode::parse, "missing column '" + std::string(name) + "'");
  }
  return static_cast<std::size_t>(it - header.begin());
}

CsvTable read_csv(std::istream& in) {
  CsvTable t;
  std::string line;
  std::size_t line_no = 0;
  bool have_header = false;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string stripped = trim(line);
    if (stripped.empty() || stripped.front() == '#') continue;
    auto fields = split_fields(line, line_no);
    if (!have_header) {
      t.header = std::move(fields);
      have_header = true;
      continue;
    }
    if (fields.size() != t.header.size()) {
      parse_fail(line_no, "expected " + std::to_string(t.header.size()) + " fields, got " +
                              std::to_string(fields.size()));
    }
    t.rows.push_back(std::move(fields));
    t.lines.push_back(line_no);
  }
  return t;
}

CsvTable read_csv_file(const std::filesystem::path& path) {
  auto in = open(path);
  return read_csv(in);
}

double parse_number(std::string_view raw, std::size_t line) {
  const std::string text = trim(raw);
  double v = 0.0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  if (first != last && *first == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || ptr != last || text.empty() || !std::isfinite(v)) {
    parse_fail(line, "'" + std::string(text) + "' is not a number");
  }
  return v;
}

int parse_int(std::string_view raw, std::size_t line) {
  const std::string text = trim(raw);
  int v = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty()) {
    parse_fail(line, "'" + std::string(text) + "' is not an integer");
  }
  return v;
}

std::vector<CostRecord> ingest_costs(std::istream& in) {
  const CsvTable t = read_csv(in);
  if (t.header.empty()) detail::fail(ErrorCode::validation, "cost file is empty");
  if (join(t.header) != kCostHeader) {
    detail::fail(ErrorCode::parse, "line 1: header must be '" + std::string(kCostHeader) + "'");
  }
  if (t.rows.empty()) detail::fail(ErrorCode::validation, "cost file has no records");

  std::vector<CostRecord> out;
  std::set<int> years;
  for (std::size_t i = 0; i < t.rows.size(); ++i) {
    const auto& r = t.rows[i];
    CostRecord rec{parse_int(r[0], t.lines[i]), parse_number(r[1], t.lines[i]),
                   parse_number(r[2], t.lines[i])};
    if (!(rec.server_cost > 0.0 && rec.power_cooling_cost > 0.0)) {
      detail::fail(ErrorCode::validation,
                   "line " + std::to_string(t.lines[i]) + ": costs must be positive");
    }
    if (!years.insert(rec.year).second) {
      detail::fail(ErrorCode::validation, "line " + std::to_string(t.lines[i]) +
                                              ": duplicate year " + std::to_string(rec.year));
    }
    out.push_back(rec);
  }
  std::sort(out.begin(), out.end(),
            [](const CostRecord& a, const CostRecord& b) { return a.year < b.year; });
  return out;
}

std::vector<CostRecord> ingest_costs(const std::filesystem::path& path) {
  auto in = open(path);
  return ingest_costs(in);
}

std::map<int, LinearWeights> ingest_weights(const std::filesystem::path& path) {
  const CsvTable t = read_csv_file(path);
  const std::size_t cy = t.column("year"), c1 = t.column("w1"), c2 = t.column("w2");
  std::map<int, LinearWeights> out;
  for (std::size_t i = 0; i < t.rows.size(); ++i) {
    const auto& r = t.rows[i];
    const LinearWeights w{parse_number(r[c1], t.lines[i]), parse_number(r[c2], t.lines[i])};
    if (!(w.w1 >= 0.0 && w.w2 >= 0.0)) {
      detail::fail(ErrorCode::validation,
                   "line " + std::to_string(t.lines[i]) + ": weights must be non-negative");
    }
    if (!out.emplace(parse_int(r[cy], t.lines[i]), w).second) {
      detail::fail(ErrorCode::validation,
                   "line " + std::to_string(t.lines[i]) + ": duplicate year");
    }
  }
  return out;
}

MarketShares ingest_shares(std::istream& in) {
  const CsvTable t = read_csv(in);
  const std::size_t cf = t.column("firm"), cs = t.column("share_percent");
  const auto inc = std::find(t.header.begin(), t.header.end(), "included");
  if (t.rows.empty()) detail::fail(ErrorCode::validation, "share file has no entries");

  MarketShares m;
  for (std::size_t i = 0; i < t.rows.size(); ++i) {
    const auto& r = t.rows[i];
    ShareEntry e{r[cf], parse_number(r[cs], t.lines[i]), true};
    if (inc != t.header.end()) {
      const std::string& v = r[static_cast<std::size_t>(inc - t.header.begin())];
      if (v == "1" || v == "true" || v == "yes") {
        e.included = true;
      } else if (v == "0" || v == "false" || v == "no") {
        e.included = false;
      } else {
        parse_fail(t.lines[i], "included must be true/false");
      }
    }
    m.entries.push_back(std::move(e));
  }
  return m;
}

MarketShares ingest_shares(const std::filesystem::path& path) {
  auto in = open(path);
  return ingest_shares(in);
}

LinearConstraints ingest_constraints(const std::filesystem::path& path,
                                     std::size_t coefficient_count) {
  const CsvTable t = read_csv_file(path);
  if (t.header.size() != coefficient_count + 1) {
    detail::fail(ErrorCode::parse, "constraint file needs " +
                                       std::to_string(coefficient_count) +
                                       " coefficient columns and a bound column");
  }
  LinearConstraints c;
  c.C = Matrix(t.rows.size(), coefficient_count);
  c.b.resize(t.rows.size());
  for (std::size_t i = 0; i < t.rows.size(); ++i) {
    for (std::size_t j = 0; j < coefficient_count; ++j) {
      c.C(i, j) = parse_number(t.rows[i][j], t.lines[i]);
    }
    c.b[i] = parse_number(t.rows[i][coefficient_count], t.lines[i]);
  }
  return c;
}

}  // namespace dcecon::cli

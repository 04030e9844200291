#pragma once

// Herfindahl-Hirschman index over percentage market shares and the
// competitive / moderate / high concentration bands.

#include <string>
#include <string_view>
#include <vector>

namespace dcecon {

struct ShareEntry {
  std::string firm;
  double share = 0.0;  // percent, [0, 100]
  bool included = true;
};

struct MarketShares {
  std::vector<ShareEntry> entries;

  static MarketShares from_values(const std::vector<double>& shares);
  /// Throws ErrorCode::domain for a share outside [0, 100] or included
  /// shares summing above 100 + kShareSumTolerance.
  void validate() const;
  double included_total() const;
};

inline constexpr double kShareSumTolerance = 1.0;
inline constexpr double kModerateThreshold = 1000.0;
inline constexpr double kHighThreshold = 1800.0;

enum class Concentration { competitive, moderate, high };

std::string_view to_string(Concentration c) noexcept;

/// Sum of squared included shares, in [0, 10000].
double hhi(const MarketShares& shares);

Concentration classify_hhi(double value);

struct HhiReport {
  double index = 0.0;
  Concentration concentration = Concentration::competitive;
  std::vector<double> contributions;  // per entry, zero when excluded
  std::vector<std::string> warnings;
};

HhiReport analyze_market(const MarketShares& shares);

}  // namespace dcecon

#pragma once

// Published sample rows for the world-wide data-center spending series
// (billions of USD): the cost inputs, the reported terminal elasticities and
// objectives of the descent/ascent runs, the linear-cost weights, and the
// reported profits. Used to check evaluation contracts, not trajectories.

#include <array>
#include <optional>

#include "dcecon/optimizer.hpp"
#include "dcecon/production.hpp"

namespace dcecon::reference {

struct SampleRow {
  CostRecord record;
  double cost_alpha;
  double cost_beta;
  double min_cost_cd;
  LinearWeights weights;
  double min_cost_linear;
  double revenue_alpha;
  double revenue_beta;
  double max_revenue_cd;
  double profit_cd;  // as reported; 1997 and 2002 disagree with rev - cost
  double profit_linear;
};

inline constexpr std::array<SampleRow, 4> kSampleRows{{
    {{1997, 65.0, 5.0}, 0.4615, 6.1674e-5, 6.8672, {0.0150, 0.6550}, 4.25,
     0.5312, 1.2676, 70.63, 64.9679, 66.38},
    {{2002, 45.0, 15.0}, 0.3338, 0.0019, 3.5813, {0.0150, 0.5050}, 8.25,
     0.6151, 1.1835, 256.32, 252.5919, 248.07},
    {{2009, 58.0, 30.0}, 0.2416, 5.1719e-4, 2.6715, {0.0200, 0.4000}, 13.16,
     0.6612, 1.1362, 698.68, 696.0085, 685.52},
    {{2012, 60.0, 40.0}, 0.1670, 7.6964e-4, 1.9872, {5.5e-17, 0.3000}, 12.0,
     0.693, 1.1052, 1006.59, 1004.6028, 994.59},
}};

inline std::optional<SampleRow> sample_row(int year) {
  for (const auto& r : kSampleRows)
    if (r.record.year == year) return r;
  return std::nullopt;
}

/// Data-center infrastructure vendor shares, Asia-Pacific 2011 (percent).
inline constexpr std::array<double, 8> kApacShares{21, 19, 11, 8, 8, 4, 4, 25};
inline constexpr double kApacPublishedHhi = 1708.0;

/// IaaS market shares, first half of 2015 (percent); the last entry is
/// "others".
inline constexpr std::array<double, 7> kIaasShares{27.2, 16.6, 11.8, 3.6, 2.7, 2.4, 35.9};
inline constexpr double kIaasPublishedHhi = 2456.34;
inline constexpr double kIaasPublishedHhiWithoutOthers = 1167.53;

/// Raw-scale profit regression on (server cost, power & cooling cost).
struct LinearModel {
  double intercept;
  double server;
  double power_cooling;
};
inline constexpr LinearModel kProfitRegression{-375.07, 4.4871, 27.409};

}  // namespace dcecon::reference

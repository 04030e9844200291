#include "dcecon/concentration.hpp"

#include <cmath>
#include <cstdio>

#include "dcecon/error.hpp"

namespace dcecon {

MarketShares MarketShares::from_values(const std::vector<double>& shares) {
  MarketShares m;
  m.entries.reserve(shares.size());
  for (std::size_t i = 0; i < shares.size(); ++i) {
    m.entries.push_back({"firm" + std::to_string(i + 1), shares[i], true});
  }
  return m;
}

double MarketShares::included_total() const {
  double total = 0.0;
  for (const auto& e : entries)
    if (e.included) total += e.share;
  return total;
}

void MarketShares::validate() const {
  for (const auto& e : entries) {
    if (!(e.share >= 0.0 && e.share <= 100.0)) {
      detail::fail(ErrorCode::domain, "share of '" + e.firm + "' is outside [0, 100]");
    }
  }
  if (included_total() > 100.0 + kShareSumTolerance) {
    detail::fail(ErrorCode::domain, "included shares sum above 101 percent");
  }
}

std::string_view to_string(Concentration c) noexcept {
  switch (c) {
    case Concentration::competitive: return "competitive";
    case Concentration::moderate: return "moderate";
    case Concentration::high: return "high";
  }
  return "?";
}

double hhi(const MarketShares& shares) {
  shares.validate();
  double sum = 0.0;
  for (const auto& e : shares.entries)
    if (e.included) sum += e.share * e.share;
  return sum;
}

Concentration classify_hhi(double value) {
  if (!(value >= 0.0 && value <= 10000.0)) {
    detail::fail(ErrorCode::domain, "HHI must lie in [0, 10000]");
  }
  if (value < kModerateThreshold) return Concentration::competitive;
  if (value < kHighThreshold) return Concentration::moderate;
  return Concentration::high;
}

HhiReport analyze_market(const MarketShares& shares) {
  HhiReport r;
  r.index = hhi(shares);
  r.concentration = classify_hhi(r.index);
  r.contributions.reserve(shares.entries.size());
  for (const auto& e : shares.entries) r.contributions.push_back(e.included ? e.share * e.share : 0.0);
  if (const double total = shares.included_total(); total > 100.0) {
    char buf[96];
    std::snprintf(buf, sizeof buf, "included shares sum to %.4g percent", total);
    r.warnings.emplace_back(buf);
  }
  return r;
}

}  // namespace dcecon

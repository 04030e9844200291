#pragma once

// Elasticity search over c = L^alpha K^beta: descent for the minimum-cost
// elasticities and ascent (below a returns-to-scale cap) for the
// maximum-revenue ones, plus the linear-cost comparison and per-year profit.

#include <cstdint>
#include <map>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "dcecon/production.hpp"

namespace dcecon {

enum class GradientRule {
  // d/dalpha = alpha L^(alpha-1) K^beta, d/dbeta = beta L^(beta-1) K^alpha.
  // This is the published update rule; it is not the calculus gradient.
  paper_rule,
  // d/dalpha = ln(L) L^alpha K^beta, d/dbeta = ln(K) L^alpha K^beta.
  analytic_gradient,
};

enum class Termination { boundary_alpha, boundary_beta, cap_reached, max_iters };

std::string_view to_string(GradientRule rule) noexcept;
std::string_view to_string(Termination t) noexcept;

struct OptimizerConfig {
  double learning_rate = 0.01;
  // When either is absent both are drawn from `seed`, uniform in (0, 1).
  std::optional<double> init_alpha;
  std::optional<double> init_beta;
  std::uint64_t seed = 42;
  std::int64_t max_iters = 1'000'000;
  double cap = 1.8;
  GradientRule mode = GradientRule::paper_rule;
  bool record_trajectory = false;

  void validate() const;
};

struct TrajectoryPoint {
  double alpha = 0.0;
  double beta = 0.0;
  double objective = 0.0;
};

struct OptimResult {
  double alpha = 0.0;
  double beta = 0.0;
  double objective = 0.0;
  std::int64_t iterations = 0;  // accepted updates
  Termination terminated_by = Termination::max_iters;
  double init_alpha = 0.0;
  double init_beta = 0.0;
  // Largest |g_alpha| + |g_beta| seen, including the rejected final step.
  double max_gradient = 0.0;
  // Starting point followed by every accepted iterate, if recorded.
  std::vector<TrajectoryPoint> trajectory;
};

/// Starting elasticities for a run. Draws are redrawn until they satisfy
/// alpha + beta < cap when `for_ascent` is set.
std::pair<double, double> initial_elasticities(const OptimizerConfig& config,
                                               bool for_ascent);

/// Descends while alpha > 0 and beta > 0; reports the last iterate that kept
/// both positive.
OptimResult sgd_cost_min(const CostRecord& record, const OptimizerConfig& config);

/// Ascends while alpha > 0, beta > 0 and alpha + beta < cap.
OptimResult sga_revenue_max(const CostRecord& record, const OptimizerConfig& config);

struct Interval {
  double lo = 0.0;
  double hi = 0.0;
};

struct LinearCostResult {
  double w1 = 0.0;
  double w2 = 0.0;
  double min_cost = 0.0;
  std::int64_t iterations = 0;
};

/// Projected descent of w1 L + w2 K over the weight box. A degenerate box
/// (lo == hi on both axes) evaluates the cost at fixed weights.
LinearCostResult sgd_linear_cost_min(const CostRecord& record, Interval w1_bounds,
                                     Interval w2_bounds, const OptimizerConfig& config);

struct LinearWeights {
  double w1 = 0.0;
  double w2 = 0.0;
};

struct ProfitFigures {
  double max_rev_cd = 0.0;
  double min_cost_cd = 0.0;
  double profit_cd = 0.0;
  std::optional<double> min_cost_linear;
  std::optional<double> profit_linear;
};

/// Profit arithmetic for one year: revenue less Cobb-Douglas cost, and
/// revenue less linear cost when the latter is known.
ProfitFigures profit_figures(double max_rev_cd, double min_cost_cd,
                             std::optional<double> min_cost_linear);

struct ProfitRow {
  int year = 0;
  ProfitFigures figures;
  OptimResult revenue;
  OptimResult cost;
};

/// Runs ascent and descent per year (concurrently) and combines them with
/// the linear cost at the supplied per-year weights. Rows are in year order.
std::vector<ProfitRow> profit_table(const std::vector<CostRecord>& records,
                                    const OptimizerConfig& config,
                                    const std::map<int, LinearWeights>& linear_weights);

}  // namespace dcecon

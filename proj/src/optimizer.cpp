#include "dcecon/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <random>
#include <string>

#include "dcecon/error.hpp"

namespace dcecon {

std::string_view to_string(GradientRule rule) noexcept {
  return rule == GradientRule::paper_rule ? "paper" : "analytic";
}

std::string_view to_string(Termination t) noexcept {
  switch (t) {
    case Termination::boundary_alpha: return "boundary_alpha";
    case Termination::boundary_beta: return "boundary_beta";
    case Termination::cap_reached: return "cap_reached";
    case Termination::max_iters: return "max_iters";
  }
  return "?";
}

void OptimizerConfig::validate() const {
  detail::require(learning_rate > 0.0 && std::isfinite(learning_rate),
                  ErrorCode::parameter, "learning rate must be positive");
  detail::require(cap > 0.0 && std::isfinite(cap), ErrorCode::parameter,
                  "cap must be positive");
  detail::require(max_iters >= 1, ErrorCode::parameter, "max_iters must be at least 1");
  if (init_alpha) {
    detail::require(*init_alpha > 0.0, ErrorCode::parameter, "initial alpha must be positive");
  }
  if (init_beta) {
    detail::require(*init_beta > 0.0, ErrorCode::parameter, "initial beta must be positive");
  }
}

namespace {

// Uniform in (0, 1) from the top 53 bits; independent of the standard
// library's distribution implementations so seeds reproduce everywhere.
double open_unit(std::mt19937_64& rng) {
  for (;;) {
    const double x = static_cast<double>(rng() >> 11) * 0x1.0p-53;
    if (x > 0.0) return x;
  }
}

struct Gradient {
  double alpha = 0.0;
  double beta = 0.0;
};

class Surface {
 public:
  Surface(const CostRecord& record, GradientRule rule)
      : log_l_(std::log(record.server_cost)),
        log_k_(std::log(record.power_cooling_cost)),
        rule_(rule) {}

  double objective(double a, double b) const { return std::exp(a * log_l_ + b * log_k_); }

  Gradient gradient(double a, double b) const {
    if (rule_ == GradientRule::paper_rule) {
      return {a * std::exp((a - 1.0) * log_l_ + b * log_k_),
              b * std::exp((b - 1.0) * log_l_ + a * log_k_)};
    }
    const double c = objective(a, b);
    return {log_l_ * c, log_k_ * c};
  }

 private:
  double log_l_;
  double log_k_;
  GradientRule rule_;
};

OptimResult run(const CostRecord& record, const OptimizerConfig& config, bool ascent) {
  record.validate();
  config.validate();

  const auto [a0, b0] = initial_elasticities(config, ascent);
  if (ascent && !(a0 + b0 < config.cap)) {
    detail::fail(ErrorCode::parameter, "initial alpha + beta must lie below the cap");
  }

  const Surface surface(record, config.mode);
  const double sign = ascent ? 1.0 : -1.0;
  const double step = sign * config.learning_rate;

  OptimResult r;
  r.init_alpha = a0;
  r.init_beta = b0;
  double a = a0;
  double b = b0;
  if (config.record_trajectory) r.trajectory.push_back({a, b, surface.objective(a, b)});

  for (std::int64_t it = 0; it < config.max_iters; ++it) {
    const Gradient g = surface.gradient(a, b);
    r.max_gradient = std::max(r.max_gradient, std::abs(g.alpha) + std::abs(g.beta));
    const double na = a + step * g.alpha;
    const double nb = b + step * g.beta;
    if (!(na > 0.0)) {
      r.terminated_by = Termination::boundary_alpha;
      break;
    }
    if (!(nb > 0.0)) {
      r.terminated_by = Termination::boundary_beta;
      break;
    }
    if (ascent && !(na + nb < config.cap)) {
      r.terminated_by = Termination::cap_reached;
      break;
    }
    a = na;
    b = nb;
    ++r.iterations;
    if (config.record_trajectory) r.trajectory.push_back({a, b, surface.objective(a, b)});
  }

  r.alpha = a;
  r.beta = b;
  r.objective = evaluate_output({1.0, a, b}, record.server_cost, record.power_cooling_cost);
  return r;
}

}  // namespace

std::pair<double, double> initial_elasticities(const OptimizerConfig& config,
                                               bool for_ascent) {
  if (config.init_alpha && config.init_beta) return {*config.init_alpha, *config.init_beta};
  std::mt19937_64 rng(config.seed);
  for (;;) {
    const double a = open_unit(rng);
    const double b = open_unit(rng);
    if (!for_ascent || a + b < config.cap) return {a, b};
  }
}

OptimResult sgd_cost_min(const CostRecord& record, const OptimizerConfig& config) {
  return run(record, config, false);
}

OptimResult sga_revenue_max(const CostRecord& record, const OptimizerConfig& config) {
  return run(record, config, true);
}

LinearCostResult sgd_linear_cost_min(const CostRecord& record, Interval w1_bounds,
                                     Interval w2_bounds, const OptimizerConfig& config) {
  record.validate();
  config.validate();
  for (const Interval& box : {w1_bounds, w2_bounds}) {
    detail::require(box.lo >= 0.0, ErrorCode::parameter, "weight bounds must be non-negative");
    detail::require(box.lo <= box.hi, ErrorCode::parameter, "weight box is empty");
  }

  const double L = record.server_cost;
  const double K = record.power_cooling_cost;
  LinearCostResult r;
  r.w1 = w1_bounds.hi;
  r.w2 = w2_bounds.hi;
  for (std::int64_t it = 0; it < config.max_iters; ++it) {
    const double n1 = std::clamp(r.w1 - config.learning_rate * L, w1_bounds.lo, w1_bounds.hi);
    const double n2 = std::clamp(r.w2 - config.learning_rate * K, w2_bounds.lo, w2_bounds.hi);
    if (n1 == r.w1 && n2 == r.w2) break;
    r.w1 = n1;
    r.w2 = n2;
    ++r.iterations;
  }
  r.min_cost = linear_cost(r.w1, r.w2, L, K);
  return r;
}

ProfitFigures profit_figures(double max_rev_cd, double min_cost_cd,
                             std::optional<double> min_cost_linear) {
  ProfitFigures f;
  f.max_rev_cd = max_rev_cd;
  f.min_cost_cd = min_cost_cd;
  f.profit_cd = max_rev_cd - min_cost_cd;
  if (min_cost_linear) {
    f.min_cost_linear = *min_cost_linear;
    f.profit_linear = max_rev_cd - *min_cost_linear;
  }
  return f;
}

std::vector<ProfitRow> profit_table(const std::vector<CostRecord>& records,
                                    const OptimizerConfig& config,
                                    const std::map<int, LinearWeights>& linear_weights) {
  detail::require(!records.empty(), ErrorCode::validation, "no cost records");
  config.validate();

  std::vector<std::future<ProfitRow>> pending;
  pending.reserve(records.size());
  for (const CostRecord& rec : records) {
    pending.push_back(std::async(std::launch::async, [&rec, &config, &linear_weights] {
      try {
        ProfitRow row;
        row.year = rec.year;
        row.revenue = sga_revenue_max(rec, config);
        row.cost = sgd_cost_min(rec, config);
        std::optional<double> lin;
        if (auto it = linear_weights.find(rec.year); it != linear_weights.end()) {
          lin = linear_cost(it->second.w1, it->second.w2, rec.server_cost,
                            rec.power_cooling_cost);
        }
        row.figures = profit_figures(row.revenue.objective, row.cost.objective, lin);
        return row;
      } catch (const Error& e) {
        throw Error(e.code(), "year " + std::to_string(rec.year) + ": " + e.what());
      }
    }));
  }

  std::vector<ProfitRow> rows;
  rows.reserve(pending.size());
  for (auto& f : pending) rows.push_back(f.get());
  std::sort(rows.begin(), rows.end(),
            [](const ProfitRow& x, const ProfitRow& y) { return x.year < y.year; });
  return rows;
}

}  // namespace dcecon

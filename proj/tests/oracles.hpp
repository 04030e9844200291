#pragma once

// Test-only oracles. Each one reaches its answer by a route that does not go
// through the library code it is used to check.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <random>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "dcecon/closed_form.hpp"
#include "dcecon/prediction.hpp"

namespace oracle {

/// Best output among `samples` random points on the budget line.
inline double budget_line_best(const dcecon::BudgetProblem& p, std::mt19937_64& rng,
                               std::size_t samples) {
  std::uniform_real_distribution<double> t(0.0, 1.0);
  double best = 0.0;
  for (std::size_t i = 0; i < samples; ++i) {
    const double s = t(rng);
    const double a = s * p.m / (p.w1 * p.R);
    const double b = (1.0 - s) * p.m / (p.w2 * p.I);
    if (a <= 0.0 || b <= 0.0) continue;
    best = std::max(best, std::pow(a * p.R, p.alpha) * std::pow(b * p.I, p.beta));
  }
  return best;
}

/// Cheapest cost among points on the output isoquant, parametrized by the
/// first input u over a wide log range and solving for v.
inline double isoquant_cheapest(const dcecon::CostProblem& p, std::mt19937_64& rng,
                                std::size_t samples) {
  std::uniform_real_distribution<double> logu(-6.0, 6.0);
  const double scale = std::pow(p.y_target, 1.0 / (p.alpha + p.beta));
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < samples; ++i) {
    const double u = scale * std::pow(10.0, logu(rng));
    const double v = std::pow(p.y_target / std::pow(u, p.alpha), 1.0 / p.beta);
    best = std::min(best, p.w1 * u + p.w2 * v);
  }
  return best;
}

/// Maximum of P u^a v^b - w1 u - w2 v by a log-spaced grid followed by
/// pattern search in (log u, log v).
inline double profit_grid_max(const dcecon::ProfitProblem& p) {
  auto profit = [&](double lu, double lv) {
    const double u = std::exp(lu), v = std::exp(lv);
    return p.P * std::exp(p.alpha * lu + p.beta * lv) - p.w1 * u - p.w2 * v;
  };
  double best_lu = 0.0, best_lv = 0.0;
  double best = -std::numeric_limits<double>::infinity();
  const int n = 200;
  const double lo = -20.0, hi = 10.0;
  for (int i = 0; i <= n; ++i)
    for (int j = 0; j <= n; ++j) {
      const double lu = lo + (hi - lo) * i / n, lv = lo + (hi - lo) * j / n;
      const double f = profit(lu, lv);
      if (f > best) {
        best = f;
        best_lu = lu;
        best_lv = lv;
      }
    }
  double step = (hi - lo) / n;
  while (step > 1e-13) {
    bool moved = false;
    for (auto [du, dv] : {std::pair{1.0, 0.0}, {-1.0, 0.0}, {0.0, 1.0}, {0.0, -1.0},
                          {1.0, 1.0}, {-1.0, -1.0}, {1.0, -1.0}, {-1.0, 1.0}}) {
      const double f = profit(best_lu + du * step, best_lv + dv * step);
      if (f > best) {
        best = f;
        best_lu += du * step;
        best_lv += dv * step;
        moved = true;
      }
    }
    if (!moved) step *= 0.5;
  }
  return best;
}

/// Elasticity formulas exactly as published for constant returns (n = 1).
inline std::pair<double, double> published_unit_elasticities(double y, double K, double S,
                                                             double I, double v, double u) {
  const double a = (std::log(y) - K - std::log(I) - v + u) / std::log(S / I);
  const double b = (std::log(y) - K - std::log(S) - v + u) / std::log(I / S);
  return {a, b};
}

/// Least squares through Eigen's SVD (pseudoinverse route).
inline std::vector<double> pseudoinverse_fit(const dcecon::DesignMatrix& d) {
  const Eigen::Index n = static_cast<Eigen::Index>(d.rows());
  const Eigen::Index p = static_cast<Eigen::Index>(d.cols());
  Eigen::MatrixXd a(n, p);
  Eigen::VectorXd y(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    Eigen::Index j = 0;
    if (d.intercept) a(i, j++) = 1.0;
    a(i, j++) = d.x1[static_cast<std::size_t>(i)];
    a(i, j) = d.x2[static_cast<std::size_t>(i)];
    y(i) = d.y[static_cast<std::size_t>(i)];
  }
  const Eigen::VectorXd x = a.jacobiSvd(Eigen::ComputeThinU | Eigen::ComputeThinV).solve(y);
  return {x.data(), x.data() + x.size()};
}

/// 1 - SS_res/SS_tot in long double, mean computed first.
inline double two_pass_r_squared(const std::vector<double>& y, const std::vector<double>& fitted) {
  long double mean = 0.0L;
  for (double v : y) mean += v;
  mean /= static_cast<long double>(y.size());
  long double tot = 0.0L, res = 0.0L;
  for (std::size_t i = 0; i < y.size(); ++i) {
    tot += (y[i] - mean) * (y[i] - mean);
    res += (static_cast<long double>(y[i]) - fitted[i]) * (static_cast<long double>(y[i]) - fitted[i]);
  }
  return static_cast<double>(1.0L - res / tot);
}

/// Least-squares objective ||y - A x||^2 minimized over (alpha, beta) on a
/// grid of the triangle alpha, beta >= 0, alpha + beta <= 1, with the
/// intercept profiled out exactly. Returns {objective, alpha, beta}.
struct TriangleMin {
  double objective;
  double alpha;
  double beta;
};

inline TriangleMin triangle_grid_min(const dcecon::DesignMatrix& d, int n) {
  TriangleMin best{std::numeric_limits<double>::infinity(), 0.0, 0.0};
  const std::size_t m = d.rows();
  for (int i = 0; i <= n; ++i)
    for (int j = 0; i + j <= n; ++j) {
      const double a = static_cast<double>(i) / n, b = static_cast<double>(j) / n;
      double mean = 0.0;
      for (std::size_t k = 0; k < m; ++k) mean += d.y[k] - a * d.x1[k] - b * d.x2[k];
      mean /= static_cast<double>(m);
      double ss = 0.0;
      for (std::size_t k = 0; k < m; ++k) {
        const double e = d.y[k] - mean - a * d.x1[k] - b * d.x2[k];
        ss += e * e;
      }
      if (ss < best.objective) best = {ss, a, b};
    }
  return best;
}

}  // namespace oracle

#pragma once

// Closed-form optima of the augmented Cobb-Douglas function f = (A R)^a (B I)^b
// over the augmentation factors (A, B): output under a budget, cost of a
// target output, and unconstrained profit.

#include <optional>

#include "dcecon/production.hpp"

namespace dcecon {

struct BudgetProblem {
  double m = 1.0;   // budget
  double w1 = 1.0;  // unit cost of the augmented recurring input
  double w2 = 1.0;  // unit cost of the augmented infrastructure input
  double R = 1.0;   // recurring cost level
  double I = 1.0;   // infrastructure cost level
  double alpha = 0.5;
  double beta = 0.5;

  void validate() const;
};

struct CostProblem {
  double y_target = 1.0;
  double w1 = 1.0;
  double w2 = 1.0;
  double R = 1.0;
  double I = 1.0;
  double alpha = 0.5;
  double beta = 0.5;

  void validate() const;
};

struct ProfitProblem {
  double w1 = 1.0;
  double w2 = 1.0;
  double R = 1.0;
  double I = 1.0;
  double alpha = 0.25;
  double beta = 0.25;
  double P = 1.0;

  void validate() const;
};

struct ClosedFormSolution {
  double A = 0.0;
  double B = 0.0;
  double objective = 0.0;  // max output, min cost or max profit
  std::optional<double> L_star;
  std::optional<double> K_star;
};

struct ProfitSolution {
  ClosedFormSolution solution;  // solution.objective is the profit
  double output = 0.0;
};

/// Output-maximizing (A, B) on the budget line w1 A R + w2 B I = m.
/// When R&D determinants are given, L* and K* are backed out of A and B.
ClosedFormSolution revenue_max(const BudgetProblem& problem,
                               const std::optional<RdDeterminants>& rd = std::nullopt);

/// Cheapest (A, B) with (A R)^a (B I)^b = y_target.
ClosedFormSolution cost_min(const CostProblem& problem,
                            const std::optional<RdDeterminants>& rd = std::nullopt);

/// Interior profit maximum of P (A R)^a (B I)^b - w1 A R - w2 B I.
/// Requires alpha + beta < 1; the optimal output does not depend on R or I.
ProfitSolution profit_max(const ProfitProblem& problem,
                          const std::optional<RdDeterminants>& rd = std::nullopt);

}  // namespace dcecon

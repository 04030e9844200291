#include "dcecon/closed_form.hpp"

#include <cmath>
#include <initializer_list>

#include "dcecon/error.hpp"

namespace dcecon {

namespace {

void require_all_positive(std::initializer_list<double> xs, const char* what) {
  for (double x : xs) {
    if (!(x > 0.0) || !std::isfinite(x)) detail::fail(ErrorCode::domain, what);
  }
}

void back_out_rd(ClosedFormSolution& s, const std::optional<RdDeterminants>& rd) {
  if (!rd) return;
  rd->validate();
  s.L_star = invert_harrod(s.A, rd->r, rd->Gamma, rd->beta1);
  s.K_star = invert_solow(s.B, rd->r, rd->Delta, rd->alpha1);
}

}  // namespace

void BudgetProblem::validate() const {
  require_all_positive({m, w1, w2, R, I, alpha, beta},
                       "budget problem fields must all be positive");
}

void CostProblem::validate() const {
  require_all_positive({y_target, w1, w2, R, I, alpha, beta},
                       "cost problem fields must all be positive");
}

void ProfitProblem::validate() const {
  require_all_positive({w1, w2, R, I, alpha, beta, P},
                       "profit problem fields must all be positive");
}

ClosedFormSolution revenue_max(const BudgetProblem& p,
                               const std::optional<RdDeterminants>& rd) {
  p.validate();
  const double n = p.alpha + p.beta;
  if (n == 0.0) detail::fail(ErrorCode::degenerate, "alpha + beta is zero");

  ClosedFormSolution s;
  s.A = p.alpha * p.m / (p.w1 * p.R * n);
  s.B = p.beta * p.m / (p.w2 * p.I * n);
  s.objective = evaluate_augmented(s.A, s.B, p.alpha, p.beta, p.R, p.I);
  back_out_rd(s, rd);
  return s;
}

ClosedFormSolution cost_min(const CostProblem& p,
                            const std::optional<RdDeterminants>& rd) {
  p.validate();
  const double n = p.alpha + p.beta;
  // Tangency gives w1 u / alpha = w2 v / beta for u = A R, v = B I.
  const double log_scale = std::log(p.y_target) / n;
  const double log_ratio = std::log(p.alpha * p.w2 / (p.beta * p.w1));
  const double u = std::exp(log_scale + (p.beta / n) * log_ratio);
  const double v = std::exp(log_scale - (p.alpha / n) * log_ratio);

  ClosedFormSolution s;
  s.A = u / p.R;
  s.B = v / p.I;
  s.objective = p.w1 * u + p.w2 * v;
  back_out_rd(s, rd);
  return s;
}

ProfitSolution profit_max(const ProfitProblem& p,
                          const std::optional<RdDeterminants>& rd) {
  p.validate();
  const double n = p.alpha + p.beta;
  if (n >= 1.0) {
    detail::fail(ErrorCode::no_interior_optimum,
                 "profit maximization needs alpha + beta < 1");
  }
  // First-order conditions: u = alpha Y / w1, v = beta Y / w2, hence
  // Y^(1 - n) = P (alpha / w1)^alpha (beta / w2)^beta.
  const double log_y = (std::log(p.P) + p.alpha * std::log(p.alpha / p.w1) +
                        p.beta * std::log(p.beta / p.w2)) /
                       (1.0 - n);
  const double y = std::exp(log_y);
  const double u = p.alpha * y / p.w1;
  const double v = p.beta * y / p.w2;

  ProfitSolution out;
  out.output = y;
  out.solution.A = u / p.R;
  out.solution.B = v / p.I;
  out.solution.objective = y - p.w1 * u - p.w2 * v;
  back_out_rd(out.solution, rd);
  return out;
}

}  // namespace dcecon

#pragma once

// Small dense convex quadratic programs
//
//   minimize    x' H x + f' x
//   subject to  C x <= b,  C_eq x = b_eq
//
// solved exactly by enumerating candidate active sets. Intended for a few
// variables and at most kMaxInequalities constraints.

#include <cstddef>

#include "dcecon/dense.hpp"

namespace dcecon {

struct QuadraticProgram {
  Matrix H;  // n x n, symmetric positive semidefinite
  Vector f;  // n
  Matrix C;  // m x n, may have zero rows
  Vector b;  // m
  Matrix C_eq;
  Vector b_eq;

  std::size_t dimension() const noexcept { return f.size(); }
  void validate() const;
};

inline constexpr std::size_t kMaxInequalities = 16;

/// First-order optimality residuals at (x, lambda, mu).
struct KktCertificate {
  double stationarity = 0.0;       // ||2 H x + f + C' lambda + C_eq' mu||_2
  double dual_feasibility = 0.0;   // max(0, -min lambda_i)
  double complementarity = 0.0;    // max |lambda_i (C x - b)_i|
  double primal_feasibility = 0.0; // max(0, max (C x - b)_i)
  double equality_residual = 0.0;  // max |(C_eq x - b_eq)_i|

  bool satisfied(double stationarity_tol, double complementarity_tol,
                 double feasibility_tol) const;
};

struct QpSolution {
  Vector x;
  Vector lambda;  // inequality multipliers, >= 0
  Vector mu;      // equality multipliers
  double objective = 0.0;
  std::vector<std::size_t> active_set;
  KktCertificate certificate;
};

KktCertificate kkt_certificate(const QuadraticProgram& qp, std::span<const double> x,
                               std::span<const double> lambda, std::span<const double> mu);

/// Throws ErrorCode::infeasible when no point satisfies the constraints and
/// ErrorCode::unbounded when the objective has no finite minimum on them.
QpSolution qp_solve(const QuadraticProgram& qp);

double qp_objective(const QuadraticProgram& qp, std::span<const double> x);

}  // namespace dcecon

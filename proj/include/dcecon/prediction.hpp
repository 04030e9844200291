#pragma once

// Fitting y = K' + alpha x1 + beta x2, either on raw inputs or on logs
// (the log-linearized Cobb-Douglas form), by ordinary least squares or by a
// linearly constrained quadratic program.

#include <optional>
#include <span>
#include <string_view>

#include "dcecon/dense.hpp"
#include "dcecon/qp.hpp"

namespace dcecon {

enum class Scale { log_linear, raw_linear };

std::string_view to_string(Scale s) noexcept;

struct DesignMatrix {
  Vector x1;     // ln S (log_linear) or S
  Vector x2;     // ln P (log_linear) or P
  Vector y;      // ln y (log_linear) or y
  Scale scale = Scale::log_linear;
  bool intercept = true;

  /// Takes logs of strictly positive S, P and y.
  static DesignMatrix log_linear(std::span<const double> S, std::span<const double> P,
                                 std::span<const double> y, bool intercept = true);
  static DesignMatrix raw_linear(std::span<const double> S, std::span<const double> P,
                                 std::span<const double> y, bool intercept = true);

  std::size_t rows() const noexcept { return y.size(); }
  std::size_t cols() const noexcept { return intercept ? 3 : 2; }

  /// Regressor matrix, with a leading column of ones when intercept is set.
  Matrix regressors() const;
  void validate() const;
};

struct FitResult {
  double intercept = 0.0;  // K'
  double alpha = 0.0;
  double beta = 0.0;
  double r_squared = 0.0;
  double residual_norm = 0.0;
  Scale scale = Scale::log_linear;
  bool has_intercept = true;

  /// Coefficients in regressor-column order.
  Vector coefficients() const;
};

struct LinearConstraints {
  Matrix C;  // rows over the coefficient vector (K', alpha, beta) or (alpha, beta)
  Vector b;
  Matrix C_eq;
  Vector b_eq;
};

/// Least squares by pivoted Householder QR. Throws ErrorCode::underdetermined
/// for fewer than three rows and ErrorCode::singular for rank deficiency.
FitResult ols_fit(const DesignMatrix& design);

/// Assembles H = A'A, f = -2 A'y and solves the constrained problem. The QP
/// objective equals ||y - A x||^2 - y'y.
FitResult qp_fit(const DesignMatrix& design, const LinearConstraints& constraints);

QuadraticProgram least_squares_qp(const DesignMatrix& design,
                                  const LinearConstraints& constraints);

/// 1 - SS_res / SS_tot on the scale of the design.
double r_squared(const FitResult& model, const DesignMatrix& design);

double predict(const FitResult& model, double S, double P, Scale scale);

/// Coefficients of the non-negative, sum-at-most-one elasticity constraints
/// (-alpha <= 0, -beta <= 0, alpha + beta <= 1) for a design with intercept.
LinearConstraints default_elasticity_constraints();

}  // namespace dcecon

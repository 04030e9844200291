#include "dcecon/prediction.hpp"

#include <cmath>
#include <string>

#include "dcecon/error.hpp"

namespace dcecon {

std::string_view to_string(Scale s) noexcept {
  return s == Scale::log_linear ? "log_linear" : "raw_linear";
}

namespace {

DesignMatrix build(std::span<const double> S, std::span<const double> P,
                   std::span<const double> y, Scale scale, bool intercept) {
  detail::require(S.size() == y.size() && P.size() == y.size(), ErrorCode::validation,
                  "design columns differ in length");
  DesignMatrix d;
  d.scale = scale;
  d.intercept = intercept;
  d.x1.reserve(y.size());
  d.x2.reserve(y.size());
  d.y.reserve(y.size());
  for (std::size_t i = 0; i < y.size(); ++i) {
    if (scale == Scale::log_linear) {
      if (!(S[i] > 0.0 && P[i] > 0.0 && y[i] > 0.0)) {
        detail::fail(ErrorCode::domain,
                     "row " + std::to_string(i) + ": log-linear fit needs positive values");
      }
      d.x1.push_back(std::log(S[i]));
      d.x2.push_back(std::log(P[i]));
      d.y.push_back(std::log(y[i]));
    } else {
      d.x1.push_back(S[i]);
      d.x2.push_back(P[i]);
      d.y.push_back(y[i]);
    }
  }
  return d;
}

FitResult from_coefficients(const Vector& x, const DesignMatrix& design) {
  FitResult r;
  r.scale = design.scale;
  r.has_intercept = design.intercept;
  std::size_t k = 0;
  if (design.intercept) r.intercept = x[k++];
  r.alpha = x[k++];
  r.beta = x[k++];

  const Vector fitted = design.regressors() * r.coefficients();
  double ss = 0.0;
  for (std::size_t i = 0; i < fitted.size(); ++i) {
    const double e = design.y[i] - fitted[i];
    ss += e * e;
  }
  r.residual_norm = std::sqrt(ss);
  r.r_squared = r_squared(r, design);
  return r;
}

}  // namespace

DesignMatrix DesignMatrix::log_linear(std::span<const double> S, std::span<const double> P,
                                      std::span<const double> y, bool intercept) {
  return build(S, P, y, Scale::log_linear, intercept);
}

DesignMatrix DesignMatrix::raw_linear(std::span<const double> S, std::span<const double> P,
                                      std::span<const double> y, bool intercept) {
  return build(S, P, y, Scale::raw_linear, intercept);
}

void DesignMatrix::validate() const {
  detail::require(x1.size() == y.size() && x2.size() == y.size(), ErrorCode::validation,
                  "design columns differ in length");
  if (rows() < cols()) {
    detail::fail(ErrorCode::underdetermined,
                 "need at least " + std::to_string(cols()) + " observations, got " +
                     std::to_string(rows()));
  }
}

Matrix DesignMatrix::regressors() const {
  Matrix a(rows(), cols());
  for (std::size_t i = 0; i < rows(); ++i) {
    std::size_t j = 0;
    if (intercept) a(i, j++) = 1.0;
    a(i, j++) = x1[i];
    a(i, j) = x2[i];
  }
  return a;
}

Vector FitResult::coefficients() const {
  if (has_intercept) return {intercept, alpha, beta};
  return {alpha, beta};
}

FitResult ols_fit(const DesignMatrix& design) {
  design.validate();
  const LeastSquaresResult ls = least_squares_qr(design.regressors(), design.y);
  if (ls.rank < design.cols()) {
    detail::fail(ErrorCode::singular, "design matrix is rank deficient (rank " +
                                          std::to_string(ls.rank) + ")");
  }
  return from_coefficients(ls.x, design);
}

QuadraticProgram least_squares_qp(const DesignMatrix& design,
                                  const LinearConstraints& constraints) {
  design.validate();
  const Matrix a = design.regressors();
  const Matrix at = a.transpose();
  QuadraticProgram qp;
  qp.H = at * a;
  qp.f = at * std::span<const double>(design.y);
  for (double& v : qp.f) v *= -2.0;
  qp.C = constraints.C;
  qp.b = constraints.b;
  qp.C_eq = constraints.C_eq;
  qp.b_eq = constraints.b_eq;
  return qp;
}

FitResult qp_fit(const DesignMatrix& design, const LinearConstraints& constraints) {
  const QpSolution sol = qp_solve(least_squares_qp(design, constraints));
  return from_coefficients(sol.x, design);
}

double r_squared(const FitResult& model, const DesignMatrix& design) {
  detail::require(model.scale == design.scale && model.has_intercept == design.intercept,
                  ErrorCode::parameter, "model and design disagree on scale or intercept");
  design.validate();
  const std::size_t n = design.rows();
  double mean = 0.0;
  for (double v : design.y) mean += v;
  mean /= static_cast<double>(n);

  const Vector fitted = design.regressors() * model.coefficients();
  double ss_tot = 0.0;
  double ss_res = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    ss_tot += (design.y[i] - mean) * (design.y[i] - mean);
    ss_res += (design.y[i] - fitted[i]) * (design.y[i] - fitted[i]);
  }
  if (ss_tot == 0.0) detail::fail(ErrorCode::degenerate, "target has zero variance");
  return 1.0 - ss_res / ss_tot;
}

double predict(const FitResult& model, double S, double P, Scale scale) {
  if (scale == Scale::raw_linear) return model.intercept + model.alpha * S + model.beta * P;
  if (!(S > 0.0 && P > 0.0)) {
    detail::fail(ErrorCode::domain, "log-linear prediction needs positive inputs");
  }
  return std::exp(model.intercept + model.alpha * std::log(S) + model.beta * std::log(P));
}

LinearConstraints default_elasticity_constraints() {
  LinearConstraints c;
  c.C = Matrix{{0.0, -1.0, 0.0}, {0.0, 0.0, -1.0}, {0.0, 1.0, 1.0}};
  c.b = {0.0, 0.0, 1.0};
  return c;
}

}  // namespace dcecon

#include "dcecon/production.hpp"

#include <cmath>
#include <string>

#include "dcecon/error.hpp"

namespace dcecon {

using detail::require;

namespace {

void require_positive(double x, const char* what) {
  if (!(x > 0.0) || !std::isfinite(x)) {
    detail::fail(ErrorCode::domain, std::string(what) + " must be positive and finite");
  }
}

void require_unit_open(double x, const char* what) {
  if (!(x > 0.0 && x < 1.0)) {
    detail::fail(ErrorCode::parameter, std::string(what) + " must lie in (0, 1)");
  }
}

}  // namespace

void CobbDouglasParams::validate() const {
  require(P > 0.0 && std::isfinite(P), ErrorCode::parameter, "P must be positive");
  require(alpha >= 0.0 && std::isfinite(alpha), ErrorCode::parameter,
          "alpha must be non-negative");
  require(beta >= 0.0 && std::isfinite(beta), ErrorCode::parameter,
          "beta must be non-negative");
}

void RdDeterminants::validate() const {
  require_positive(r, "r");
  require_positive(Gamma, "Gamma");
  require_positive(Delta, "Delta");
  require_unit_open(alpha1, "alpha1");
  require_unit_open(beta1, "beta1");
}

TechProgress TechProgress::from_determinants(const RdDeterminants& rd,
                                             double L_star, double K_star) {
  rd.validate();
  TechProgress t;
  t.r = rd.r;
  t.L_star = L_star;
  t.K_star = K_star;
  t.Gamma = rd.Gamma;
  t.Delta = rd.Delta;
  t.alpha1 = rd.alpha1;
  t.beta1 = rd.beta1;
  t.A = harrod_progress(rd.r, L_star, rd.Gamma, rd.beta1);
  t.B = solow_progress(rd.r, K_star, rd.Delta, rd.alpha1);
  return t;
}

void CostRecord::validate() const {
  if (!(server_cost > 0.0) || !(power_cooling_cost > 0.0) ||
      !std::isfinite(server_cost) || !std::isfinite(power_cooling_cost)) {
    detail::fail(ErrorCode::validation,
                 "costs for year " + std::to_string(year) + " must be positive");
  }
}

double evaluate_output(const CobbDouglasParams& params, double L, double K) {
  params.validate();
  require_positive(L, "L");
  require_positive(K, "K");
  return std::exp(std::log(params.P) + params.alpha * std::log(L) +
                  params.beta * std::log(K));
}

double evaluate_augmented(double A, double B, double alpha, double beta,
                          double R, double I) {
  require_positive(A, "A");
  require_positive(B, "B");
  require_positive(R, "R");
  require_positive(I, "I");
  return std::exp(alpha * std::log(A * R) + beta * std::log(B * I));
}

double evaluate_augmented(const TechProgress& tech, double alpha, double beta,
                          double R, double I) {
  return evaluate_augmented(tech.A, tech.B, alpha, beta, R, I);
}

double harrod_progress(double r, double L_star, double Gamma, double beta1) {
  require_positive(r, "r");
  require_positive(L_star, "L_star");
  require_positive(Gamma, "Gamma");
  require_unit_open(beta1, "beta1");
  return r * std::exp(beta1 * std::log(L_star) + (1.0 - beta1) * std::log(Gamma));
}

double solow_progress(double r, double K_star, double Delta, double alpha1) {
  require_positive(r, "r");
  require_positive(K_star, "K_star");
  require_positive(Delta, "Delta");
  require_unit_open(alpha1, "alpha1");
  return r * std::exp(alpha1 * std::log(K_star) + (1.0 - alpha1) * std::log(Delta));
}

namespace {

// Solves factor = r * x^e * other^(1-e) for x.
double invert_augmentation(double factor, double r, double other, double e) {
  require_positive(factor, "augmentation factor");
  require_positive(r, "r");
  require_positive(other, "R&D determinant");
  if (e == 0.0) detail::fail(ErrorCode::singular, "exponent parameter is zero");
  require_unit_open(e, "exponent parameter");
  return std::exp((std::log(factor) - std::log(r) - (1.0 - e) * std::log(other)) / e);
}

}  // namespace

double invert_harrod(double A, double r, double Gamma, double beta1) {
  return invert_augmentation(A, r, Gamma, beta1);
}

double invert_solow(double B, double r, double Delta, double alpha1) {
  return invert_augmentation(B, r, Delta, alpha1);
}

double linear_cost(double w1, double w2, double L, double K) {
  require(w1 >= 0.0 && w2 >= 0.0, ErrorCode::parameter,
          "linear cost weights must be non-negative");
  return w1 * L + w2 * K;
}

std::string_view to_string(ReturnsToScale rts) noexcept {
  switch (rts) {
    case ReturnsToScale::constant: return "CRS";
    case ReturnsToScale::increasing: return "IRS";
    case ReturnsToScale::decreasing: return "DRS";
  }
  return "?";
}

ScaleClassification returns_to_scale(double alpha, double beta) {
  const double n = alpha + beta;
  if (std::abs(n - 1.0) <= kConstantReturnsTolerance) return {n, ReturnsToScale::constant};
  return {n, n > 1.0 ? ReturnsToScale::increasing : ReturnsToScale::decreasing};
}

}  // namespace dcecon

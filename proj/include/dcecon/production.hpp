#pragma once

// Two-input Cobb-Douglas production function, its factor-augmented form and
// the R&D-driven labour (Harrod) and capital (Solow) augmentation factors.

#include <string_view>

namespace dcecon {

struct CobbDouglasParams {
  double P = 1.0;      // total factor productivity
  double alpha = 0.0;  // elasticity of the first input
  double beta = 0.0;   // elasticity of the second input

  /// Throws ErrorCode::parameter unless P > 0, alpha >= 0, beta >= 0.
  void validate() const;
};

/// R&D determinants of the augmentation factors. The factor levels A and B
/// follow from these together with the R&D labour and capital levels.
struct RdDeterminants {
  double r = 1.0;       // future discount rate
  double Gamma = 1.0;   // R&D capital behind labour augmentation
  double Delta = 1.0;   // R&D labour behind capital augmentation
  double alpha1 = 0.5;  // in (0, 1)
  double beta1 = 0.5;   // in (0, 1)

  void validate() const;
};

struct TechProgress {
  double A = 1.0;  // labour-augmentation factor
  double B = 1.0;  // capital-augmentation factor
  double r = 1.0;
  double L_star = 1.0;  // R&D labour
  double K_star = 1.0;  // R&D capital
  double Gamma = 1.0;
  double Delta = 1.0;
  double alpha1 = 0.5;
  double beta1 = 0.5;

  static TechProgress from_determinants(const RdDeterminants& rd, double L_star,
                                        double K_star);
};

/// One year of observed input costs.
struct CostRecord {
  int year = 0;
  double server_cost = 0.0;
  double power_cooling_cost = 0.0;

  void validate() const;
};

/// P * L^alpha * K^beta, evaluated in log space. L and K must be positive.
double evaluate_output(const CobbDouglasParams& params, double L, double K);

/// (A R)^alpha (B I)^beta.
double evaluate_augmented(double A, double B, double alpha, double beta,
                          double R, double I);
double evaluate_augmented(const TechProgress& tech, double alpha, double beta,
                          double R, double I);

/// A = r * L*^beta1 * Gamma^(1 - beta1)
double harrod_progress(double r, double L_star, double Gamma, double beta1);

/// B = r * K*^alpha1 * Delta^(1 - alpha1)
double solow_progress(double r, double K_star, double Delta, double alpha1);

/// Recovers L* from A; inverse of harrod_progress in its second argument.
double invert_harrod(double A, double r, double Gamma, double beta1);

/// Recovers K* from B; inverse of solow_progress in its second argument.
double invert_solow(double B, double r, double Delta, double alpha1);

/// w1 * L + w2 * K with non-negative unit weights.
double linear_cost(double w1, double w2, double L, double K);

enum class ReturnsToScale { constant, increasing, decreasing };

std::string_view to_string(ReturnsToScale rts) noexcept;

struct ScaleClassification {
  double n = 0.0;  // alpha + beta
  ReturnsToScale kind = ReturnsToScale::constant;
};

inline constexpr double kConstantReturnsTolerance = 1e-9;

ScaleClassification returns_to_scale(double alpha, double beta);

}  // namespace dcecon

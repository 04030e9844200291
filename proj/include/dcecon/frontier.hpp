#pragma once

// Log-linear stochastic production frontier
//   ln y = K + alpha ln S + beta ln I + v - u
// with symmetric shock v and one-sided technical inefficiency u >= 0.

#include <cstddef>
#include <random>
#include <vector>

namespace dcecon {

struct FrontierSpec {
  double K = 0.0;  // log-frontier intercept
  double alpha = 0.5;
  double beta = 0.5;
  double v = 0.0;  // random shock
  double u = 0.0;  // technical inefficiency, >= 0
  double n = 1.0;  // returns to scale, alpha + beta
};

struct Elasticities {
  double alpha = 0.0;
  double beta = 0.0;
};

double frontier_output(const FrontierSpec& spec, double S, double I);

/// exp(-u): observed output over frontier output.
double technical_efficiency(double u);

/// Solves the frontier equation together with alpha + beta = n for the two
/// elasticities. Fails with ErrorCode::singular when S == I.
Elasticities elasticities_from_frontier(double y, double K, double S, double I,
                                        double v, double u, double n = 1.0);

struct FrontierSample {
  double S = 0.0;
  double I = 0.0;
  double v = 0.0;
  double u = 0.0;
  double y = 0.0;
};

struct SynthesisConfig {
  double K = 0.0;
  double alpha = 0.5;
  double beta = 0.5;
  double sigma_v = 0.1;
  double sigma_u = 0.1;
  double input_min = 1.0;
  double input_max = 100.0;
  std::size_t count = 10;
};

/// Draws inputs S, I ~ U(input_min, input_max), v ~ N(0, sigma_v) and
/// u ~ |N(0, sigma_u)|, then evaluates the frontier at each draw.
std::vector<FrontierSample> synthesize_frontier(const SynthesisConfig& config,
                                                std::mt19937_64& rng);

}  // namespace dcecon

#include "dcecon/frontier.hpp"

#include <cmath>
#include <string>

#include "dcecon/error.hpp"

namespace dcecon {

namespace {

void require_positive_input(double x, const char* what) {
  if (!(x > 0.0) || !std::isfinite(x)) {
    detail::fail(ErrorCode::domain, std::string(what) + " must be positive");
  }
}

void require_inefficiency(double u) {
  detail::require(u >= 0.0 && std::isfinite(u), ErrorCode::domain,
                  "inefficiency u must be non-negative");
}

}  // namespace

double frontier_output(const FrontierSpec& spec, double S, double I) {
  require_positive_input(S, "S");
  require_positive_input(I, "I");
  require_inefficiency(spec.u);
  return std::exp(spec.K + spec.alpha * std::log(S) + spec.beta * std::log(I) +
                  spec.v - spec.u);
}

double technical_efficiency(double u) {
  require_inefficiency(u);
  return std::exp(-u);
}

Elasticities elasticities_from_frontier(double y, double K, double S, double I,
                                        double v, double u, double n) {
  require_positive_input(y, "y");
  require_positive_input(S, "S");
  require_positive_input(I, "I");
  require_inefficiency(u);
  const double log_ratio = std::log(S) - std::log(I);
  if (log_ratio == 0.0) {
    detail::fail(ErrorCode::singular, "S and I coincide; elasticities are not identified");
  }
  // X = alpha ln S + beta ln I with beta = n - alpha.
  const double x = std::log(y) - K - v + u;
  Elasticities e;
  e.alpha = (x - n * std::log(I)) / log_ratio;
  e.beta = n - e.alpha;
  return e;
}

std::vector<FrontierSample> synthesize_frontier(const SynthesisConfig& config,
                                                std::mt19937_64& rng) {
  detail::require(config.sigma_v >= 0.0 && config.sigma_u >= 0.0, ErrorCode::parameter,
                  "shock scales must be non-negative");
  detail::require(config.input_min > 0.0 && config.input_max > config.input_min,
                  ErrorCode::parameter, "input range must be positive and non-empty");

  std::uniform_real_distribution<double> input(config.input_min, config.input_max);
  std::normal_distribution<double> standard(0.0, 1.0);

  std::vector<FrontierSample> out;
  out.reserve(config.count);
  FrontierSpec spec{config.K, config.alpha, config.beta, 0.0, 0.0,
                    config.alpha + config.beta};
  for (std::size_t i = 0; i < config.count; ++i) {
    FrontierSample s;
    s.S = input(rng);
    s.I = input(rng);
    s.v = config.sigma_v * standard(rng);
    s.u = std::abs(config.sigma_u * standard(rng));
    spec.v = s.v;
    spec.u = s.u;
    s.y = frontier_output(spec, s.S, s.I);
    out.push_back(s);
  }
  return out;
}

}  // namespace dcecon

#pragma once

// Subcommand bodies, kept apart from argument parsing so they can be tested
// directly. Each returns a report without the command echo filled in.

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dcecon/cli/io.hpp"
#include "dcecon/cli/report.hpp"
#include "dcecon/closed_form.hpp"
#include "dcecon/concentration.hpp"
#include "dcecon/frontier.hpp"
#include "dcecon/optimizer.hpp"
#include "dcecon/prediction.hpp"

namespace dcecon::cli {

enum class TableCommand { cost_min, revenue_max, profit };

struct TableOptions {
  OptimizerConfig config;
  std::map<int, LinearWeights> weights;
  std::optional<std::filesystem::path> trace_dir;
};

/// Runs the optimizer over every year. Rows are ordered by year; sampled
/// years also carry the published reference figures.
RunReport run_table(TableCommand command, const std::vector<CostRecord>& records,
                    const TableOptions& options);

/// Published linear-cost weights for the sampled years.
std::map<int, LinearWeights> sample_weights();

Json optimizer_config_json(const OptimizerConfig& config);

RunReport run_revenue_max_closed(const BudgetProblem& problem,
                                 const std::optional<RdDeterminants>& rd);
RunReport run_cost_min_closed(const CostProblem& problem,
                              const std::optional<RdDeterminants>& rd);
RunReport run_profit_max_closed(const ProfitProblem& problem,
                                const std::optional<RdDeterminants>& rd);

struct FrontierObservation {
  double y = 1.0;
  double S = 1.0;
  double I = 1.0;
};

RunReport run_sfa_recover(const FrontierSpec& spec, const FrontierObservation& obs);
RunReport run_sfa_synthesize(const SynthesisConfig& config, std::uint64_t seed);

struct FitOptions {
  std::string x1 = "new_server_cost";
  std::string x2 = "power_cooling_cost";
  std::string target = "output";
  Scale scale = Scale::log_linear;
  bool intercept = true;
  std::optional<LinearConstraints> constraints;
};

DesignMatrix design_from_table(const CsvTable& table, const FitOptions& options);
RunReport run_fit(const CsvTable& table, const FitOptions& options);

RunReport run_hhi(const MarketShares& shares);

}  // namespace dcecon::cli

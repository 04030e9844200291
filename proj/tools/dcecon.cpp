// dcecon: data-center production economics from the command line.
//
// Exit codes: 0 success, 1 usage error, 2 data/validation error,
// 3 numerical failure.

#include <cstdint>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "dcecon/cli/commands.hpp"
#include "dcecon/cli/io.hpp"
#include "dcecon/error.hpp"

namespace {

using namespace dcecon;
using namespace dcecon::cli;

constexpr int kExitUsage = 1;
constexpr int kExitData = 2;
constexpr int kExitNumerical = 3;

struct GlobalFlags {
  std::string input;
  std::string format = "json";
  std::uint64_t seed = 42;
  double learning_rate = 0.01;
  std::string mode = "paper";
  double cap = 1.8;
  std::string trace_dir;
  std::int64_t max_iters = 1'000'000;
  std::optional<double> init_alpha;
  std::optional<double> init_beta;
  std::string weights;
};

struct RdFlags {
  std::optional<double> r, gamma, delta, alpha1, beta1;

  std::optional<RdDeterminants> resolve() const {
    const int given = r.has_value() + gamma.has_value() + delta.has_value() +
                      alpha1.has_value() + beta1.has_value();
    if (given == 0) return std::nullopt;
    if (given != 5) {
      throw CLI::ValidationError("--r, --gamma, --delta, --alpha1, --beta1 go together");
    }
    return RdDeterminants{*r, *gamma, *delta, *alpha1, *beta1};
  }
};

void add_rd_flags(CLI::App* cmd, RdFlags& rd) {
  cmd->add_option("--r", rd.r, "discount rate (enables L*/K* back-out)");
  cmd->add_option("--gamma", rd.gamma, "R&D capital for labour augmentation");
  cmd->add_option("--delta", rd.delta, "R&D labour for capital augmentation");
  cmd->add_option("--alpha1", rd.alpha1, "capital-augmentation exponent in (0,1)");
  cmd->add_option("--beta1", rd.beta1, "labour-augmentation exponent in (0,1)");
}

std::string echo(int argc, char** argv) {
  std::string s = "dcecon";
  for (int i = 1; i < argc; ++i) s += std::string(" ") + argv[i];
  return s;
}

OptimizerConfig optimizer_config(const GlobalFlags& g) {
  OptimizerConfig c;
  c.learning_rate = g.learning_rate;
  c.seed = g.seed;
  c.mode = g.mode == "analytic" ? GradientRule::analytic_gradient : GradientRule::paper_rule;
  c.cap = g.cap;
  c.max_iters = g.max_iters;
  c.init_alpha = g.init_alpha;
  c.init_beta = g.init_beta;
  return c;
}

std::filesystem::path require_input(const GlobalFlags& g) {
  if (g.input.empty()) throw CLI::RequiredError("--input");
  return g.input;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cobb-Douglas production economics for data centers"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalFlags g;
  app.add_option("--input", g.input, "input CSV file");
  app.add_option("--format", g.format, "report encoding")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();
  app.add_option("--seed", g.seed, "seed for random initial elasticities")->capture_default_str();
  app.add_option("--learning-rate", g.learning_rate, "step size")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--mode", g.mode, "gradient rule")
      ->check(CLI::IsMember({"paper", "analytic"}))
      ->capture_default_str();
  app.add_option("--cap", g.cap, "ascent bound on alpha + beta")->capture_default_str();
  app.add_option("--trace", g.trace_dir, "directory for per-iteration trajectory CSVs");
  app.add_option("--max-iters", g.max_iters, "iteration safety cap")->capture_default_str();
  app.add_option("--init-alpha", g.init_alpha, "initial alpha (with --init-beta)");
  app.add_option("--init-beta", g.init_beta, "initial beta (with --init-alpha)");
  app.add_option("--weights", g.weights,
                 "CSV year,w1,w2 of linear-cost weights (default: published sample weights)");

  auto* cost = app.add_subcommand("cost-min", "minimum Cobb-Douglas cost per year");
  auto* revenue = app.add_subcommand("revenue-max", "maximum revenue per year");
  auto* profit = app.add_subcommand("profit", "revenue minus cost per year");

  BudgetProblem budget;
  RdFlags rd_budget;
  auto* rev_closed = app.add_subcommand("revenue-max-closed", "closed-form budget optimum");
  rev_closed->add_option("--m", budget.m, "budget")->required();
  rev_closed->add_option("--w1", budget.w1)->required();
  rev_closed->add_option("--w2", budget.w2)->required();
  rev_closed->add_option("--R", budget.R)->required();
  rev_closed->add_option("--I", budget.I)->required();
  rev_closed->add_option("--alpha", budget.alpha)->required();
  rev_closed->add_option("--beta", budget.beta)->required();
  add_rd_flags(rev_closed, rd_budget);

  CostProblem costp;
  RdFlags rd_cost;
  auto* cost_closed = app.add_subcommand("cost-min-closed", "closed-form cheapest input mix");
  cost_closed->add_option("--y-target", costp.y_target)->required();
  cost_closed->add_option("--w1", costp.w1)->required();
  cost_closed->add_option("--w2", costp.w2)->required();
  cost_closed->add_option("--R", costp.R)->required();
  cost_closed->add_option("--I", costp.I)->required();
  cost_closed->add_option("--alpha", costp.alpha)->required();
  cost_closed->add_option("--beta", costp.beta)->required();
  add_rd_flags(cost_closed, rd_cost);

  ProfitProblem profitp;
  RdFlags rd_profit;
  auto* profit_closed = app.add_subcommand("profit-max-closed", "closed-form profit optimum");
  profit_closed->add_option("--w1", profitp.w1)->required();
  profit_closed->add_option("--w2", profitp.w2)->required();
  profit_closed->add_option("--R", profitp.R)->required();
  profit_closed->add_option("--I", profitp.I)->required();
  profit_closed->add_option("--alpha", profitp.alpha)->required();
  profit_closed->add_option("--beta", profitp.beta)->required();
  profit_closed->add_option("--P", profitp.P, "total factor productivity")->capture_default_str();
  add_rd_flags(profit_closed, rd_profit);

  FrontierSpec frontier;
  FrontierObservation obs;
  SynthesisConfig synth;
  bool synthesize = false;
  auto* sfa = app.add_subcommand("sfa", "stochastic frontier: recover or synthesize");
  sfa->add_flag("--synthesize", synthesize, "draw synthetic frontier observations");
  sfa->add_option("--K", frontier.K, "log-frontier intercept")->capture_default_str();
  sfa->add_option("--v", frontier.v, "random shock")->capture_default_str();
  sfa->add_option("--u", frontier.u, "technical inefficiency")->capture_default_str();
  sfa->add_option("--n", frontier.n, "returns to scale")->capture_default_str();
  sfa->add_option("--y", obs.y, "observed output");
  sfa->add_option("--S", obs.S, "server cost");
  sfa->add_option("--I", obs.I, "infrastructure cost");
  sfa->add_option("--alpha", synth.alpha)->capture_default_str();
  sfa->add_option("--beta", synth.beta)->capture_default_str();
  sfa->add_option("--sigma-v", synth.sigma_v)->capture_default_str();
  sfa->add_option("--sigma-u", synth.sigma_u)->capture_default_str();
  sfa->add_option("--count", synth.count)->capture_default_str();
  sfa->add_option("--input-min", synth.input_min)->capture_default_str();
  sfa->add_option("--input-max", synth.input_max)->capture_default_str();

  FitOptions fit_opts;
  bool constrained = false;
  bool no_intercept = false;
  std::string scale = "log";
  std::string constraints_path;
  auto* fit = app.add_subcommand("fit", "least-squares or QP fit of the linear model");
  fit->add_flag("--constrained", constrained, "solve as a constrained QP");
  fit->add_option("--constraints", constraints_path,
                  "CSV of constraint rows: coefficients then bound (default: "
                  "-alpha<=0, -beta<=0, alpha+beta<=1)");
  fit->add_option("--x1", fit_opts.x1)->capture_default_str();
  fit->add_option("--x2", fit_opts.x2)->capture_default_str();
  fit->add_option("--target", fit_opts.target)->capture_default_str();
  fit->add_option("--scale", scale)->check(CLI::IsMember({"log", "raw"}))->capture_default_str();
  fit->add_flag("--no-intercept", no_intercept);

  auto* hhi_cmd = app.add_subcommand("hhi", "Herfindahl-Hirschman index of market shares");

  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    RunReport report;
    if (*cost || *revenue || *profit) {
      const auto records = ingest_costs(require_input(g));
      TableOptions opts;
      opts.config = optimizer_config(g);
      opts.weights = g.weights.empty() ? sample_weights() : ingest_weights(g.weights);
      if (!g.trace_dir.empty()) opts.trace_dir = g.trace_dir;
      const TableCommand which = *cost      ? TableCommand::cost_min
                                 : *revenue ? TableCommand::revenue_max
                                            : TableCommand::profit;
      report = run_table(which, records, opts);
    } else if (*rev_closed) {
      report = run_revenue_max_closed(budget, rd_budget.resolve());
    } else if (*cost_closed) {
      report = run_cost_min_closed(costp, rd_cost.resolve());
    } else if (*profit_closed) {
      report = run_profit_max_closed(profitp, rd_profit.resolve());
    } else if (*sfa) {
      if (synthesize) {
        synth.K = frontier.K;
        report = run_sfa_synthesize(synth, g.seed);
      } else {
        report = run_sfa_recover(frontier, obs);
      }
    } else if (*fit) {
      fit_opts.scale = scale == "raw" ? Scale::raw_linear : Scale::log_linear;
      fit_opts.intercept = !no_intercept;
      const std::size_t ncoef = fit_opts.intercept ? 3 : 2;
      if (!constraints_path.empty()) {
        fit_opts.constraints = ingest_constraints(constraints_path, ncoef);
      } else if (constrained) {
        if (!fit_opts.intercept) {
          throw CLI::ValidationError("--constrained without --constraints needs an intercept");
        }
        fit_opts.constraints = default_elasticity_constraints();
      }
      report = run_fit(read_csv_file(require_input(g)), fit_opts);
    } else if (*hhi_cmd) {
      report = run_hhi(ingest_shares(require_input(g)));
    }

    report.command = echo(argc, argv);
    std::cout << (g.format == "csv" ? report.dump_csv() : report.dump_json());
    for (const auto& w : report.warnings) std::cerr << "warning: " << w << "\n";
    return 0;
  } catch (const CLI::Error& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    std::cerr << to_string(e.code()) << " error: " << e.what() << "\n";
    return is_numerical(e.code()) ? kExitNumerical : kExitData;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitData;
  }
}

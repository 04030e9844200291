#include "dcecon/cli/commands.hpp"

#include <algorithm>
#include <fstream>
#include <random>

#include "dcecon/error.hpp"
#include "dcecon/reference_data.hpp"

namespace dcecon::cli {

namespace {

Json optional_json(const std::optional<double>& v) { return v ? Json(*v) : Json(nullptr); }

void write_trace(const std::filesystem::path& dir, const std::string& stem,
                 const OptimResult& r) {
  std::filesystem::create_directories(dir);
  const auto path = dir / (stem + ".csv");
  std::ofstream out(path);
  if (!out) detail::fail(ErrorCode::validation, "cannot write trace '" + path.string() + "'");
  out.precision(17);
  out << "iteration,alpha,beta,objective\n";
  for (std::size_t i = 0; i < r.trajectory.size(); ++i) {
    const auto& p = r.trajectory[i];
    out << i << ',' << p.alpha << ',' << p.beta << ',' << p.objective << '\n';
  }
}

Json run_json(const OptimResult& r) {
  Json j;
  j["alpha"] = r.alpha;
  j["beta"] = r.beta;
  j["objective"] = r.objective;
  j["iterations"] = r.iterations;
  j["terminated_by"] = to_string(r.terminated_by);
  j["init_alpha"] = r.init_alpha;
  j["init_beta"] = r.init_beta;
  return j;
}

Json record_json(const CostRecord& rec) {
  Json j;
  j["year"] = rec.year;
  j["new_server_cost"] = rec.server_cost;
  j["power_cooling_cost"] = rec.power_cooling_cost;
  return j;
}

Json reference_json(const reference::SampleRow& s) {
  const ProfitFigures f =
      profit_figures(s.max_revenue_cd, s.min_cost_cd, s.min_cost_linear);
  Json j;
  j["max_rev_cd"] = f.max_rev_cd;
  j["min_cost_cd"] = f.min_cost_cd;
  j["profit_cd"] = f.profit_cd;
  j["min_cost_linear"] = optional_json(f.min_cost_linear);
  j["profit_linear"] = optional_json(f.profit_linear);
  j["reported_profit_cd"] = s.profit_cd;
  return j;
}

std::optional<double> linear_for(const std::map<int, LinearWeights>& weights,
                                 const CostRecord& rec) {
  const auto it = weights.find(rec.year);
  if (it == weights.end()) return std::nullopt;
  return linear_cost(it->second.w1, it->second.w2, rec.server_cost, rec.power_cooling_cost);
}

std::string trace_stem(TableCommand c, int year, const char* kind) {
  const char* name = c == TableCommand::cost_min      ? "cost-min"
                     : c == TableCommand::revenue_max ? "revenue-max"
                                                      : "profit";
  std::string s = std::string(name) + "_" + std::to_string(year);
  if (*kind) s += std::string("_") + kind;
  return s;
}

Json solution_json(const ClosedFormSolution& s) {
  Json j;
  j["A"] = s.A;
  j["B"] = s.B;
  j["objective"] = s.objective;
  j["L_star"] = optional_json(s.L_star);
  j["K_star"] = optional_json(s.K_star);
  return j;
}

void add_rd(Json& config, const std::optional<RdDeterminants>& rd) {
  if (!rd) return;
  config["r"] = rd->r;
  config["gamma"] = rd->Gamma;
  config["delta"] = rd->Delta;
  config["alpha1"] = rd->alpha1;
  config["beta1"] = rd->beta1;
}

}  // namespace

std::map<int, LinearWeights> sample_weights() {
  std::map<int, LinearWeights> out;
  for (const auto& r : reference::kSampleRows) out.emplace(r.record.year, r.weights);
  return out;
}

Json optimizer_config_json(const OptimizerConfig& c) {
  Json j;
  j["learning_rate"] = c.learning_rate;
  j["seed"] = c.seed;
  j["mode"] = to_string(c.mode);
  j["cap"] = c.cap;
  j["max_iters"] = c.max_iters;
  j["init_alpha"] = optional_json(c.init_alpha);
  j["init_beta"] = optional_json(c.init_beta);
  return j;
}

RunReport run_table(TableCommand command, const std::vector<CostRecord>& records,
                    const TableOptions& options) {
  detail::require(!records.empty(), ErrorCode::validation, "no cost records");
  OptimizerConfig config = options.config;
  config.record_trajectory = options.trace_dir.has_value();

  RunReport report;
  report.config = optimizer_config_json(config);
  Json weights = Json::object();
  for (const auto& [year, w] : options.weights) weights[std::to_string(year)] = {w.w1, w.w2};
  report.config["linear_weights"] = weights;

  for (const auto& rec : records) {
    if (!options.weights.count(rec.year) && command != TableCommand::revenue_max) {
      report.warnings.push_back("no linear-cost weights for " + std::to_string(rec.year));
    }
  }

  if (command == TableCommand::profit) {
    report.provenance =
        "profit = max revenue (ascent) - min cost (descent); sampled years carry the "
        "published revenue/cost/profit figures under 'reference'";
    for (const ProfitRow& row : profit_table(records, config, options.weights)) {
      const auto rec = *std::find_if(records.begin(), records.end(),
                                     [&](const CostRecord& r) { return r.year == row.year; });
      Json j = record_json(rec);
      j["max_rev_cd"] = row.figures.max_rev_cd;
      j["min_cost_cd"] = row.figures.min_cost_cd;
      j["profit_cd"] = row.figures.profit_cd;
      j["min_cost_linear"] = optional_json(row.figures.min_cost_linear);
      j["profit_linear"] = optional_json(row.figures.profit_linear);
      j["revenue_run"] = run_json(row.revenue);
      j["cost_run"] = run_json(row.cost);
      if (auto s = reference::sample_row(row.year)) j["reference"] = reference_json(*s);
      report.rows.push_back(std::move(j));
      if (options.trace_dir) {
        write_trace(*options.trace_dir, trace_stem(command, row.year, "revenue"), row.revenue);
        write_trace(*options.trace_dir, trace_stem(command, row.year, "cost"), row.cost);
      }
    }
    return report;
  }

  const bool ascent = command == TableCommand::revenue_max;
  report.provenance = ascent ? "maximum revenue by gradient ascent below the cap"
                             : "minimum Cobb-Douglas cost by gradient descent";
  for (const auto& rec : records) {
    OptimResult r;
    try {
      r = ascent ? sga_revenue_max(rec, config) : sgd_cost_min(rec, config);
    } catch (const Error& e) {
      throw Error(e.code(), "year " + std::to_string(rec.year) + ": " + e.what());
    }
    Json j = record_json(rec);
    j.update(run_json(r));
    j[ascent ? "max_revenue" : "min_cost"] = r.objective;
    if (!ascent) j["min_cost_linear"] = optional_json(linear_for(options.weights, rec));
    if (auto s = reference::sample_row(rec.year)) {
      Json ref;
      ref["alpha"] = ascent ? s->revenue_alpha : s->cost_alpha;
      ref["beta"] = ascent ? s->revenue_beta : s->cost_beta;
      ref["objective"] = ascent ? s->max_revenue_cd : s->min_cost_cd;
      j["reference"] = ref;
    }
    report.rows.push_back(std::move(j));
    if (options.trace_dir) write_trace(*options.trace_dir, trace_stem(command, rec.year, ""), r);
  }
  return report;
}

RunReport run_revenue_max_closed(const BudgetProblem& p,
                                 const std::optional<RdDeterminants>& rd) {
  RunReport report;
  report.config = {{"m", p.m},   {"w1", p.w1},       {"w2", p.w2},     {"R", p.R},
                   {"I", p.I},   {"alpha", p.alpha}, {"beta", p.beta}};
  add_rd(report.config, rd);
  const ClosedFormSolution s = revenue_max(p, rd);
  Json row = solution_json(s);
  row["spend"] = p.w1 * s.A * p.R + p.w2 * s.B * p.I;
  report.rows.push_back(std::move(row));
  report.provenance = "output-maximizing augmentation factors on the budget line";
  return report;
}

RunReport run_cost_min_closed(const CostProblem& p, const std::optional<RdDeterminants>& rd) {
  RunReport report;
  report.config = {{"y_target", p.y_target}, {"w1", p.w1}, {"w2", p.w2},      {"R", p.R},
                   {"I", p.I},               {"alpha", p.alpha}, {"beta", p.beta}};
  add_rd(report.config, rd);
  const ClosedFormSolution s = cost_min(p, rd);
  Json row = solution_json(s);
  row["output"] = evaluate_augmented(s.A, s.B, p.alpha, p.beta, p.R, p.I);
  report.rows.push_back(std::move(row));
  report.provenance = "cheapest augmentation factors reaching the target output";
  return report;
}

RunReport run_profit_max_closed(const ProfitProblem& p,
                                const std::optional<RdDeterminants>& rd) {
  RunReport report;
  report.config = {{"w1", p.w1}, {"w2", p.w2},       {"R", p.R},       {"I", p.I},
                   {"P", p.P},   {"alpha", p.alpha}, {"beta", p.beta}};
  add_rd(report.config, rd);
  const ProfitSolution s = profit_max(p, rd);
  Json row = solution_json(s.solution);
  row["output"] = s.output;
  row["profit"] = s.solution.objective;
  report.rows.push_back(std::move(row));
  report.provenance = "interior profit maximum; output is independent of R and I";
  return report;
}

RunReport run_sfa_recover(const FrontierSpec& spec, const FrontierObservation& obs) {
  RunReport report;
  report.config = {{"mode", "recover"}, {"K", spec.K}, {"v", spec.v}, {"u", spec.u},
                   {"n", spec.n},       {"y", obs.y},  {"S", obs.S},  {"I", obs.I}};
  const Elasticities e = elasticities_from_frontier(obs.y, spec.K, obs.S, obs.I, spec.v,
                                                    spec.u, spec.n);
  const ScaleClassification rts = returns_to_scale(e.alpha, e.beta);
  Json row;
  row["alpha"] = e.alpha;
  row["beta"] = e.beta;
  row["n"] = rts.n;
  row["returns_to_scale"] = to_string(rts.kind);
  row["technical_efficiency"] = technical_efficiency(spec.u);
  report.rows.push_back(std::move(row));
  report.provenance = "elasticities from the log-linear frontier with alpha + beta = n";
  return report;
}

RunReport run_sfa_synthesize(const SynthesisConfig& c, std::uint64_t seed) {
  RunReport report;
  report.config = {{"mode", "synthesize"}, {"K", c.K},
                   {"alpha", c.alpha},     {"beta", c.beta},
                   {"sigma_v", c.sigma_v}, {"sigma_u", c.sigma_u},
                   {"input_min", c.input_min}, {"input_max", c.input_max},
                   {"count", c.count},     {"seed", seed}};
  std::mt19937_64 rng(seed);
  const double n = c.alpha + c.beta;
  for (const FrontierSample& s : synthesize_frontier(c, rng)) {
    Json row;
    row["S"] = s.S;
    row["I"] = s.I;
    row["v"] = s.v;
    row["u"] = s.u;
    row["y"] = s.y;
    row["technical_efficiency"] = technical_efficiency(s.u);
    if (s.S != s.I) {
      const Elasticities e = elasticities_from_frontier(s.y, c.K, s.S, s.I, s.v, s.u, n);
      row["recovered_alpha"] = e.alpha;
      row["recovered_beta"] = e.beta;
    }
    report.rows.push_back(std::move(row));
  }
  report.provenance = "synthetic frontier draws: v ~ N(0, sigma_v), u ~ |N(0, sigma_u)|";
  return report;
}

DesignMatrix design_from_table(const CsvTable& table, const FitOptions& o) {
  const std::size_t c1 = table.column(o.x1), c2 = table.column(o.x2),
                    cy = table.column(o.target);
  Vector s, p, y;
  for (std::size_t i = 0; i < table.rows.size(); ++i) {
    s.push_back(parse_number(table.rows[i][c1], table.lines[i]));
    p.push_back(parse_number(table.rows[i][c2], table.lines[i]));
    y.push_back(parse_number(table.rows[i][cy], table.lines[i]));
  }
  return o.scale == Scale::log_linear ? DesignMatrix::log_linear(s, p, y, o.intercept)
                                      : DesignMatrix::raw_linear(s, p, y, o.intercept);
}

RunReport run_fit(const CsvTable& table, const FitOptions& o) {
  const DesignMatrix design = design_from_table(table, o);
  RunReport report;
  report.config = {{"x1", o.x1},
                   {"x2", o.x2},
                   {"target", o.target},
                   {"scale", to_string(o.scale)},
                   {"intercept", o.intercept},
                   {"constrained", o.constraints.has_value()},
                   {"rows", design.rows()}};

  FitResult fit;
  Json row;
  if (o.constraints) {
    const QpSolution sol = qp_solve(least_squares_qp(design, *o.constraints));
    fit = qp_fit(design, *o.constraints);
    Json cert;
    cert["stationarity"] = sol.certificate.stationarity;
    cert["dual_feasibility"] = sol.certificate.dual_feasibility;
    cert["complementarity"] = sol.certificate.complementarity;
    cert["primal_feasibility"] = sol.certificate.primal_feasibility;
    row["kkt"] = cert;
    row["multipliers"] = sol.lambda;
    row["active_set"] = sol.active_set;
    report.provenance = "least squares under linear inequality constraints (QP)";
  } else {
    fit = ols_fit(design);
    report.provenance = "ordinary least squares";
  }
  row["intercept"] = fit.intercept;
  row["alpha"] = fit.alpha;
  row["beta"] = fit.beta;
  row["r_squared"] = fit.r_squared;
  row["residual_norm"] = fit.residual_norm;
  row["scale"] = to_string(fit.scale);
  report.rows.push_back(std::move(row));
  return report;
}

RunReport run_hhi(const MarketShares& shares) {
  const HhiReport h = analyze_market(shares);
  RunReport report;
  report.config = {{"firms", shares.entries.size()}};
  for (std::size_t i = 0; i < shares.entries.size(); ++i) {
    const auto& e = shares.entries[i];
    Json row;
    row["firm"] = e.firm;
    row["share_percent"] = e.share;
    row["included"] = e.included;
    row["contribution"] = h.contributions[i];
    report.rows.push_back(std::move(row));
  }
  Json total;
  total["firm"] = "TOTAL";
  total["share_percent"] = shares.included_total();
  total["hhi"] = h.index;
  total["classification"] = to_string(h.concentration);
  report.rows.push_back(std::move(total));
  report.warnings = h.warnings;
  report.provenance = "HHI = sum of squared percentage shares; bands at 1000 and 1800";
  return report;
}

}  // namespace dcecon::cli

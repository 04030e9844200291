#include "doctest.h"

#include <cmath>
#include <fstream>
#include <random>
#include <string>

#include "dcecon/error.hpp"
#include "dcecon/optimizer.hpp"
#include "dcecon/reference_data.hpp"
#include "json.hpp"

using namespace dcecon;

namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an Error");
  return ErrorCode::parse;
}

nlohmann::json golden() {
  std::ifstream in(std::string(DCECON_GOLDEN_DIR) + "/optimizer_runs.json");
  REQUIRE(in.good());
  return nlohmann::json::parse(in);
}

OptimizerConfig fixed(double a, double b) {
  OptimizerConfig c;
  c.init_alpha = a;
  c.init_beta = b;
  return c;
}

}  // namespace

TEST_CASE("seeded initial elasticities") {
  OptimizerConfig c;
  const auto [a, b] = initial_elasticities(c, false);
  CHECK(a == 0.755155532954539);
  CHECK(a > 0.0);
  CHECK(b > 0.0);
  CHECK(b < 1.0);
  CHECK(initial_elasticities(c, true) == initial_elasticities(c, true));
  c.seed = 43;
  CHECK(initial_elasticities(c, false).first != a);

  c.cap = 0.2;
  for (std::uint64_t s = 0; s < 200; ++s) {
    c.seed = s;
    const auto [x, y] = initial_elasticities(c, true);
    CHECK(x + y < 0.2);
  }
  const auto given = initial_elasticities(fixed(0.3, 0.4), true);
  CHECK(given.first == 0.3);
  CHECK(given.second == 0.4);
}

TEST_CASE("runs match the independent reference implementation") {
  const auto g = golden();
  REQUIRE(g["cases"].size() == 12);
  for (const auto& c : g["cases"]) {
    OptimizerConfig cfg;
    cfg.learning_rate = c["learning_rate"].get<double>();
    cfg.mode = c["mode"] == "paper" ? GradientRule::paper_rule : GradientRule::analytic_gradient;
    if (c["seed"].is_null()) {
      cfg.init_alpha = c["init_alpha"].get<double>();
      cfg.init_beta = c["init_beta"].get<double>();
    } else {
      cfg.seed = c["seed"].get<std::uint64_t>();
    }
    const CostRecord rec{2000, c["L"].get<double>(), c["K"].get<double>()};
    const bool ascent = c["ascent"].get<bool>();
    const auto r = ascent ? sga_revenue_max(rec, cfg) : sgd_cost_min(rec, cfg);
    const auto& want = c["result"];
    INFO("L=", rec.server_cost, " K=", rec.power_cooling_cost, " ascent=", ascent,
         " mode=", c["mode"].get<std::string>());
    CHECK(r.init_alpha == c["init_alpha"].get<double>());
    CHECK(r.init_beta == c["init_beta"].get<double>());
    CHECK(r.iterations == want["iterations"].get<std::int64_t>());
    CHECK(to_string(r.terminated_by) == want["terminated_by"].get<std::string>());
    const auto close = [](double x, double y) {
      return std::abs(x - y) <= 1e-12 * std::max(1.0, std::abs(y));
    };
    CHECK(close(r.alpha, want["alpha"].get<double>()));
    CHECK(close(r.beta, want["beta"].get<double>()));
    CHECK(close(r.objective, want["objective"].get<double>()));
    CHECK(close(r.max_gradient, want["max_gradient"].get<double>()));
  }
}

TEST_CASE("descent and ascent are monotone and respect their constraints") {
  std::mt19937_64 rng(23);
  std::uniform_real_distribution<double> in(1.5, 100.0), lr(1e-3, 1e-2), init(0.05, 0.85);
  for (int i = 0; i < 300; ++i) {
    const CostRecord rec{2000, in(rng), in(rng)};
    OptimizerConfig cfg = fixed(init(rng), init(rng));
    cfg.learning_rate = lr(rng);
    cfg.max_iters = 500;
    cfg.record_trajectory = true;

    const auto d = sgd_cost_min(rec, cfg);
    REQUIRE(d.trajectory.size() == static_cast<std::size_t>(d.iterations) + 1);
    for (std::size_t k = 1; k < d.trajectory.size(); ++k) {
      CHECK(d.trajectory[k].objective <= d.trajectory[k - 1].objective);
      CHECK(d.trajectory[k].alpha > 0.0);
      CHECK(d.trajectory[k].beta > 0.0);
    }

    const auto u = sga_revenue_max(rec, cfg);
    for (std::size_t k = 1; k < u.trajectory.size(); ++k) {
      CHECK(u.trajectory[k].objective >= u.trajectory[k - 1].objective);
      CHECK(u.trajectory[k].alpha + u.trajectory[k].beta < cfg.cap);
    }
    if (u.terminated_by == Termination::cap_reached) {
      CHECK(u.alpha + u.beta >= cfg.cap - cfg.learning_rate * u.max_gradient);
    }
  }
}

TEST_CASE("trajectory endpoints match the result") {
  OptimizerConfig cfg;
  cfg.record_trajectory = true;
  const auto r = sga_revenue_max({1997, 65, 5}, cfg);
  REQUIRE_FALSE(r.trajectory.empty());
  CHECK(r.trajectory.front().alpha == r.init_alpha);
  CHECK(r.trajectory.back().alpha == r.alpha);
  CHECK(r.trajectory.back().beta == r.beta);
  cfg.record_trajectory = false;
  CHECK(sga_revenue_max({1997, 65, 5}, cfg).trajectory.empty());
}

TEST_CASE("optimizer input validation") {
  OptimizerConfig cfg;
  cfg.learning_rate = 0.0;
  CHECK(code_of([&] { sgd_cost_min({1, 2, 3}, cfg); }) == ErrorCode::parameter);
  cfg = fixed(1.0, 1.0);
  CHECK(code_of([&] { sga_revenue_max({1, 2, 3}, cfg); }) == ErrorCode::parameter);
  cfg = fixed(-0.1, 0.5);
  CHECK(code_of([&] { sgd_cost_min({1, 2, 3}, cfg); }) == ErrorCode::parameter);
  CHECK(code_of([] { sgd_cost_min({1, 0.0, 3}, {}); }) == ErrorCode::validation);
  OptimizerConfig zero;
  zero.max_iters = 0;
  CHECK(code_of([&] { sgd_cost_min({1, 2, 3}, zero); }) == ErrorCode::parameter);
}

TEST_CASE("linear cost descent") {
  OptimizerConfig cfg;
  const auto fixed_point = sgd_linear_cost_min({1997, 65, 5}, {0.015, 0.015}, {0.655, 0.655}, cfg);
  CHECK(fixed_point.iterations == 0);
  CHECK(std::abs(fixed_point.min_cost - 4.25) <= 1e-2);

  const auto r = sgd_linear_cost_min({2009, 58, 30}, {0.02, 1.0}, {0.4, 2.0}, cfg);
  CHECK(r.w1 == 0.02);
  CHECK(r.w2 == 0.4);
  CHECK(r.min_cost == doctest::Approx(58 * 0.02 + 30 * 0.4));
  CHECK(code_of([&] { sgd_linear_cost_min({1, 2, 3}, {1, 0.5}, {0, 1}, cfg); }) ==
        ErrorCode::parameter);
}

TEST_CASE("profit figures") {
  const auto f = profit_figures(1006.59, 1.9872, 12.0);
  CHECK(std::abs(f.profit_cd - 1004.6028) <= 1e-2);
  REQUIRE(f.profit_linear.has_value());
  CHECK(std::abs(*f.profit_linear - 994.59) <= 1e-2);
  CHECK_FALSE(profit_figures(3, 1, std::nullopt).profit_linear.has_value());
}

TEST_CASE("profit table is ordered and deterministic") {
  std::vector<CostRecord> recs;
  std::map<int, LinearWeights> w;
  for (auto it = reference::kSampleRows.rbegin(); it != reference::kSampleRows.rend(); ++it) {
    recs.push_back(it->record);
    w[it->record.year] = it->weights;
  }
  OptimizerConfig cfg;
  cfg.max_iters = 20000;
  const auto a = profit_table(recs, cfg, w);
  const auto b = profit_table(recs, cfg, w);
  REQUIRE(a.size() == 4);
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].year == reference::kSampleRows[i].record.year);
    CHECK(a[i].figures.profit_cd == b[i].figures.profit_cd);
    CHECK(a[i].figures.profit_cd == a[i].revenue.objective - a[i].cost.objective);
    CHECK(std::abs(*a[i].figures.min_cost_linear - reference::kSampleRows[i].min_cost_linear) <=
          1e-2);
  }

  recs.push_back({2020, -1.0, 3.0});
  try {
    profit_table(recs, cfg, w);
    FAIL("expected failure");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::validation);
    CHECK(std::string(e.what()).find("year 2020") != std::string::npos);
  }
  CHECK(code_of([&] { profit_table({}, cfg, w); }) == ErrorCode::validation);
}

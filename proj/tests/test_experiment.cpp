#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "semirand/experiment.hpp"
#include "semirand/io.hpp"
#include "semirand/patterns.hpp"
#include "semirand/stats.hpp"

using namespace semirand;

namespace {

struct AlwaysDone : Strategy {
  std::vector<Vertex> propose(const ProcessState& st, const std::vector<Vertex>&) override {
    return std::vector<Vertex>(st.s - st.r, 1);
  }
  bool succeeded(const ProcessState&) override { return true; }
};

struct LyingStrategy : Strategy {
  std::vector<Vertex> propose(const ProcessState& st, const std::vector<Vertex>&) override {
    return std::vector<Vertex>(st.s - st.r, 1);
  }
  bool succeeded(const ProcessState& st) override { return st.round >= 1; }
};

}  // namespace

TEST_CASE("wilson interval") {
  const Interval iv = wilson_interval(50, 100);
  CHECK(iv.low > 0.40);
  CHECK(iv.high < 0.60);
  CHECK(iv.low < 0.5);
  CHECK(iv.high > 0.5);
  CHECK(wilson_interval(0, 10).low == 0.0);
  CHECK(wilson_interval(10, 10).high == 1.0);
  CHECK_THROWS_AS(wilson_interval(5, 0), std::invalid_argument);
  CHECK_THROWS_AS(wilson_interval(11, 10), std::invalid_argument);
}

TEST_CASE("wilson coverage on a fair coin") {
  // 200 meta-trials of 100 flips each; the 95% interval should cover 0.5
  // between 90% and 99% of the time.
  Rng rng(2024);
  int covered = 0;
  for (int rep = 0; rep < 200; ++rep) {
    long long heads = 0;
    for (int i = 0; i < 100; ++i) heads += rng.below(2);
    const Interval iv = wilson_interval(heads, 100);
    if (iv.low <= 0.5 && 0.5 <= iv.high) ++covered;
  }
  CHECK(covered >= 180);
  CHECK(covered <= 198);
}

TEST_CASE("estimate_success with an always-succeeding stub") {
  // The stub declares success on the empty graph, which the oracle confirms
  // only for the empty pattern.
  Hypergraph empty_pattern(2, 2);
  const CellResult res = estimate_success(
      empty_pattern, 1, [] { return std::make_unique<AlwaysDone>(); }, 100, 10,
      std::nan(""), 50, 1, 1);
  CHECK(res.successes == 50);
  CHECK(res.p_hat == 1.0);
  CHECK(res.ci_high == 1.0);
  CHECK(res.mean_rounds_success == 0.0);
}

TEST_CASE("a success not confirmed by the oracle aborts loudly") {
  const Hypergraph k3 = make_clique(3, 2);
  CHECK_THROWS(estimate_success(
      k3, 1, [] { return std::make_unique<LyingStrategy>(); }, 100, 5, std::nan(""), 10, 1, 1));
}

TEST_CASE("passive play never builds K4 at desk scale") {
  const Hypergraph k4 = make_clique(4, 2);
  const CellResult res = estimate_success(
      k4, 1, [&] { return std::make_unique<PassiveStrategy>(k4); }, 10000, 100,
      std::nan(""), 200, 99, 0);
  CHECK(res.successes == 0);
  CHECK(res.p_hat == 0.0);
}

TEST_CASE("degeneracy builder clears its design threshold at moderate scale") {
  const Hypergraph k3 = make_clique(3, 2);
  const long long t = 8 * static_cast<long long>(std::sqrt(2500.0));
  const CellResult res = estimate_success(
      k3, 1, [&] { return std::make_unique<DegeneracyBuilder>(k3); }, 2500, t,
      std::nan(""), 100, 7, 0);
  CHECK(res.p_hat >= 0.85);
}

TEST_CASE("config parsing and validation") {
  const Hypergraph k3 = make_clique(3, 2);
  write_file("/tmp/semirand_test_k3.json", to_json(k3));
  const std::string text = R"({
    "pattern": "/tmp/semirand_test_k3.json",
    "r": 1,
    "strategy": {"name": "degeneracy", "omega": 4.0},
    "n": [500, 1000],
    "c": [0.5, 2.0],
    "kappa": "auto",
    "trials": 5,
    "seed": 11,
    "workers": 2,
    "out": "",
    "format": "csv"
  })";
  const ExperimentConfig cfg = parse_experiment_config(text);
  CHECK(cfg.strategy.name == "degeneracy");
  CHECK(cfg.n_list.size() == 2);
  CHECK(cfg.t_rule.c_list.size() == 2);
  CHECK_FALSE(cfg.t_rule.kappa.has_value());

  CHECK_THROWS_AS(parse_experiment_config("{"), ParseError);

  ExperimentConfig bad = cfg;
  bad.n_list.clear();
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);

  ExperimentConfig both = cfg;
  both.t_rule.t_list = {10};
  CHECK_THROWS_AS(both.validate(), std::invalid_argument);
}

TEST_CASE("resolve_rounds applies the ceiling") {
  CHECK(resolve_rounds(1.0, Rational(1, 2), 100) == 10);
  CHECK(resolve_rounds(0.5, Rational(1, 2), 100) == 5);
  CHECK(resolve_rounds(1.0, Rational(2, 3), 1000) == 100);
  CHECK(resolve_rounds(1.5, Rational(0, 1), 50) == 2);  // ceil(1.5)
}

TEST_CASE("sweep produces a monotone success curve and stable csv") {
  const Hypergraph k3 = make_clique(3, 2);
  write_file("/tmp/semirand_test_k3.json", to_json(k3));
  ExperimentConfig cfg;
  cfg.pattern_path = "/tmp/semirand_test_k3.json";
  cfg.pattern = k3;
  cfg.r = 1;
  cfg.strategy = {"degeneracy", 8.0, 0, 0};
  cfg.n_list = {900};
  cfg.t_rule.c_list = {0.25, 0.5, 1, 2, 4, 8};
  cfg.trials = 60;
  cfg.seed = 31337;
  cfg.workers = 2;

  const ExperimentResult res = sweep(cfg);
  REQUIRE(res.cells.size() == 6);
  // Non-decreasing up to CI overlap: the lower CI may not exceed a later
  // upper CI.
  for (size_t i = 0; i + 1 < res.cells.size(); ++i)
    CHECK(res.cells[i].ci_low <= res.cells[i + 1].ci_high + 1e-12);
  CHECK(res.cells.front().p_hat < res.cells.back().p_hat);

  const std::string csv = to_csv(res);
  CHECK(csv.rfind("n,t,c,trials,successes,p_hat,ci_low,ci_high,mean_rounds_success,seed\n", 0) ==
        0);

  // Byte-identical across worker counts.
  ExperimentConfig cfg4 = cfg;
  cfg4.workers = 4;
  CHECK(to_csv(sweep(cfg4)) == csv);
  ExperimentConfig cfg1 = cfg;
  cfg1.workers = 1;
  CHECK(to_csv(sweep(cfg1)) == csv);
}

TEST_CASE("sweep reports oracle-confirmed successes") {
  const Hypergraph k3 = make_clique(3, 2);
  ExperimentConfig cfg;
  cfg.pattern_path = "inline";
  cfg.pattern = k3;
  cfg.r = 1;
  cfg.strategy = {"degeneracy", 8.0, 0, 0};
  cfg.n_list = {900};
  cfg.t_rule.t_list = {240};
  cfg.trials = 40;
  cfg.seed = 5;
  cfg.workers = 2;
  const ExperimentResult res = sweep(cfg);
  long long total = 0;
  for (const auto& cell : res.cells) total += cell.successes;
  CHECK(res.successes_confirmed == total);
}

TEST_CASE("verify suites pass at default scale") {
  const auto suites = run_verify_suites(7, 1);
  REQUIRE_FALSE(suites.empty());
  for (const auto& s : suites) {
    INFO(s.name, ": observed=", s.observed, " bound=", s.bound);
    CHECK(s.pass);
  }
  const std::string report = verify_report_json(suites);
  CHECK(report.find("\"pass\": true") != std::string::npos);
}

#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "semirand/hypergraph.hpp"
#include "semirand/process.hpp"
#include "semirand/rational.hpp"
#include "semirand/strategies.hpp"

namespace semirand {

// t-rule of a sweep: either explicit round counts or t = ceil(c * n^kappa).
struct TRule {
  std::vector<long long> t_list;
  std::vector<double> c_list;
  std::optional<Rational> kappa;  // unset + c_list nonempty means "auto"
};

struct ExperimentConfig {
  std::string pattern_path;  // echoed into the manifest
  Hypergraph pattern{0, 2};
  int r = 1;
  StrategySpec strategy;
  std::vector<long long> n_list;
  TRule t_rule;
  long long trials = 1;
  uint64_t seed = 0;
  int workers = 0;  // 0 = hardware concurrency
  std::string out;
  std::string format = "csv";  // csv | json

  void validate() const;
};

ExperimentConfig parse_experiment_config(const std::string& json_text);

struct CellResult {
  long long n = 0;
  long long t = 0;
  double c = 0.0;  // NaN when the t-rule was explicit
  long long trials = 0;
  long long successes = 0;
  double p_hat = 0.0;
  double ci_low = 0.0;
  double ci_high = 0.0;
  double mean_rounds_success = 0.0;  // NaN when there were no successes
  uint64_t seed = 0;
};

struct ExperimentResult {
  std::vector<CellResult> cells;
  long long successes_confirmed = 0;  // oracle-checked successes across all cells
  double wall_time_s = 0.0;
};

using StrategyFactory = std::function<std::unique_ptr<Strategy>()>;

// Runs `trials` independent trials of one (n, t) cell with seeds derived
// from cell_seed, distributing trials over `workers` threads. Every reported
// success is confirmed with contains_copy; a discrepancy throws.
CellResult estimate_success(const Hypergraph& pattern, int r, const StrategyFactory& factory,
                            long long n, long long t, double c, long long trials,
                            uint64_t cell_seed, int workers,
                            long long* successes_confirmed = nullptr);

// Full grid of cells, deterministic regardless of worker count.
ExperimentResult sweep(const ExperimentConfig& cfg);

std::string to_csv(const ExperimentResult& res);
std::string to_json(const ExperimentResult& res);
std::string manifest_json(const ExperimentConfig& cfg, const ExperimentResult& res);

// Resolves the t-rule against one n (exposed for tests).
long long resolve_rounds(double c, const Rational& kappa, long long n);

// Empirical-bound suites behind the `verify` CLI subcommand. scale >= 1
// multiplies the trial counts.
struct VerifySuiteResult {
  std::string name;
  bool pass = false;
  double observed = 0.0;
  double bound = 0.0;
  std::string detail;
};

std::vector<VerifySuiteResult> run_verify_suites(uint64_t seed, int scale = 1, int workers = 0);
std::string verify_report_json(const std::vector<VerifySuiteResult>& suites);

}  // namespace semirand

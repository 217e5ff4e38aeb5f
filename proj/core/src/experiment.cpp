#include "semirand/experiment.hpp"

#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "json.hpp"
#include "semirand/io.hpp"
#include "semirand/log.hpp"
#include "semirand/oracle.hpp"
#include "semirand/patterns.hpp"
#include "semirand/stats.hpp"

namespace semirand {

namespace {

using json = nlohmann::ordered_json;

int effective_workers(int requested, long long trials) {
  int w = requested > 0 ? requested
                        : static_cast<int>(std::thread::hardware_concurrency());
  if (w < 1) w = 1;
  return static_cast<int>(std::min<long long>(w, trials));
}

std::string format_double(double v, int precision) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f", precision, v);
  return buf;
}

std::string format_c(double c) {
  if (std::isnan(c)) return "";
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6g", c);
  return buf;
}

}  // namespace

void ExperimentConfig::validate() const {
  if (n_list.empty()) throw std::invalid_argument("empty n list");
  if (trials < 1) throw std::invalid_argument("trials must be >= 1");
  if (t_rule.t_list.empty() == t_rule.c_list.empty())
    throw std::invalid_argument("exactly one of t list / c list must be given");
  if (!(1 <= r && r <= pattern.s())) throw std::invalid_argument("need 1 <= r <= s");
  for (long long n : n_list)
    if (n < pattern.s()) throw std::invalid_argument("n smaller than the uniformity");
}

ExperimentConfig parse_experiment_config(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw ParseError("malformed experiment config");
  ExperimentConfig cfg;
  if (!j.contains("pattern")) throw ParseError("config needs a pattern path");
  cfg.pattern_path = j["pattern"].get<std::string>();
  cfg.pattern = load_hypergraph(cfg.pattern_path);
  cfg.r = j.value("r", 1);
  if (j.contains("strategy")) {
    const auto& s = j["strategy"];
    if (s.is_string()) {
      cfg.strategy.name = s.get<std::string>();
    } else {
      cfg.strategy.name = s.value("name", "passive");
      cfg.strategy.omega = s.value("omega", 8.0);
      cfg.strategy.ell = s.value("ell", 0);
      cfg.strategy.m = s.value("m", 0);
    }
  }
  cfg.n_list = j.value("n", std::vector<long long>{});
  if (j.contains("t")) cfg.t_rule.t_list = j["t"].get<std::vector<long long>>();
  if (j.contains("c")) cfg.t_rule.c_list = j["c"].get<std::vector<double>>();
  if (j.contains("kappa")) {
    const auto& kp = j["kappa"];
    if (kp.is_string()) {
      if (kp.get<std::string>() != "auto") throw ParseError("kappa must be auto or {num,den}");
    } else {
      cfg.t_rule.kappa = Rational(kp.at("num").get<long long>(), kp.at("den").get<long long>());
    }
  }
  cfg.trials = j.value("trials", 1LL);
  cfg.seed = j.value("seed", 0ULL);
  cfg.workers = j.value("workers", 0);
  cfg.out = j.value("out", "");
  cfg.format = j.value("format", "csv");
  cfg.validate();
  return cfg;
}

long long resolve_rounds(double c, const Rational& kappa, long long n) {
  const double t = c * std::pow(static_cast<double>(n), kappa.value());
  if (t > 9e15) throw std::invalid_argument("round budget overflows");
  return static_cast<long long>(std::ceil(t));
}

CellResult estimate_success(const Hypergraph& pattern, int r, const StrategyFactory& factory,
                            long long n, long long t, double c, long long trials,
                            uint64_t cell_seed, int workers, long long* successes_confirmed) {
  if (trials < 1) throw std::invalid_argument("trials must be >= 1");

  struct TrialOutcome {
    char success = 0;
    long long rounds = 0;
  };
  std::vector<TrialOutcome> outcomes(trials);
  std::atomic<long long> next{0};
  std::atomic<bool> failed{false};
  std::string failure;
  std::mutex failure_mu;

  auto worker = [&] {
    while (!failed.load(std::memory_order_relaxed)) {
      const long long i = next.fetch_add(1);
      if (i >= trials) return;
      try {
        ProcessConfig cfg;
        cfg.n = static_cast<int>(n);
        cfg.r = r;
        cfg.s = pattern.s();
        cfg.seed = derive_seed(cell_seed, static_cast<uint64_t>(i));
        cfg.t_max = t;
        std::unique_ptr<Strategy> strategy = factory();
        RunResult rr = run(cfg, *strategy);
        if (rr.success && !contains_copy(rr.state.graph, pattern))
          throw std::logic_error("strategy reported success but the copy is not present");
        outcomes[i] = {static_cast<char>(rr.success ? 1 : 0), rr.rounds_used};
      } catch (const std::exception& ex) {
        std::lock_guard<std::mutex> lock(failure_mu);
        failure = ex.what();
        failed.store(true);
      }
    }
  };

  const int w = effective_workers(workers, trials);
  if (w == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(w);
    for (int i = 0; i < w; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  if (failed.load()) throw std::runtime_error("trial failed: " + failure);

  CellResult res;
  res.n = n;
  res.t = t;
  res.c = c;
  res.trials = trials;
  res.seed = cell_seed;
  long long rounds_sum = 0;
  for (const auto& o : outcomes) {
    if (o.success) {
      ++res.successes;
      rounds_sum += o.rounds;
    }
  }
  res.p_hat = static_cast<double>(res.successes) / static_cast<double>(trials);
  const Interval iv = wilson_interval(res.successes, trials);
  res.ci_low = iv.low;
  res.ci_high = iv.high;
  res.mean_rounds_success =
      res.successes > 0 ? static_cast<double>(rounds_sum) / static_cast<double>(res.successes)
                        : std::nan("");
  if (successes_confirmed) *successes_confirmed += res.successes;
  return res;
}

ExperimentResult sweep(const ExperimentConfig& cfg) {
  cfg.validate();
  const auto start = std::chrono::steady_clock::now();

  Rational kappa(0, 1);
  if (!cfg.t_rule.c_list.empty())
    kappa = cfg.t_rule.kappa ? *cfg.t_rule.kappa : auto_kappa(cfg.strategy, cfg.pattern, cfg.r);

  ExperimentResult result;
  long long cell_index = 0;
  for (long long n : cfg.n_list) {
    std::vector<std::pair<long long, double>> cells;  // (t, c)
    if (!cfg.t_rule.t_list.empty()) {
      for (long long t : cfg.t_rule.t_list) cells.push_back({t, std::nan("")});
    } else {
      for (double c : cfg.t_rule.c_list) cells.push_back({resolve_rounds(c, kappa, n), c});
    }
    for (const auto& [t, c] : cells) {
      const uint64_t cell_seed = derive_seed(cfg.seed, static_cast<uint64_t>(cell_index++));
      StrategyFactory factory = [&cfg] { return make_strategy(cfg.strategy, cfg.pattern, cfg.r); };
      if (t < 0) throw std::invalid_argument("negative round budget");
      result.cells.push_back(estimate_success(cfg.pattern, cfg.r, factory, n, t, c, cfg.trials,
                                              cell_seed, cfg.workers,
                                              &result.successes_confirmed));
    }
  }
  result.wall_time_s =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return result;
}

std::string to_csv(const ExperimentResult& res) {
  std::string out =
      "n,t,c,trials,successes,p_hat,ci_low,ci_high,mean_rounds_success,seed\n";
  for (const CellResult& cell : res.cells) {
    out += std::to_string(cell.n) + "," + std::to_string(cell.t) + "," + format_c(cell.c) + "," +
           std::to_string(cell.trials) + "," + std::to_string(cell.successes) + "," +
           format_double(cell.p_hat, 6) + "," + format_double(cell.ci_low, 6) + "," +
           format_double(cell.ci_high, 6) + ",";
    out += std::isnan(cell.mean_rounds_success) ? "nan"
                                                : format_double(cell.mean_rounds_success, 3);
    out += "," + std::to_string(cell.seed) + "\n";
  }
  return out;
}

std::string to_json(const ExperimentResult& res) {
  json j = json::array();
  for (const CellResult& cell : res.cells) {
    json row;
    row["n"] = cell.n;
    row["t"] = cell.t;
    if (!std::isnan(cell.c)) row["c"] = cell.c;
    row["trials"] = cell.trials;
    row["successes"] = cell.successes;
    row["p_hat"] = cell.p_hat;
    row["ci_low"] = cell.ci_low;
    row["ci_high"] = cell.ci_high;
    if (!std::isnan(cell.mean_rounds_success))
      row["mean_rounds_success"] = cell.mean_rounds_success;
    row["seed"] = cell.seed;
    j.push_back(row);
  }
  return j.dump(2);
}

std::string manifest_json(const ExperimentConfig& cfg, const ExperimentResult& res) {
  json j;
  j["version"] = kVersion;
  j["pattern"] = cfg.pattern_path;
  j["r"] = cfg.r;
  j["strategy"] = {{"name", cfg.strategy.name}, {"omega", cfg.strategy.omega}};
  if (cfg.strategy.name == "loose_cycle") {
    j["strategy"]["ell"] = cfg.strategy.ell;
    j["strategy"]["m"] = cfg.strategy.m;
  }
  j["n"] = cfg.n_list;
  if (!cfg.t_rule.t_list.empty()) j["t"] = cfg.t_rule.t_list;
  if (!cfg.t_rule.c_list.empty()) j["c"] = cfg.t_rule.c_list;
  if (cfg.t_rule.kappa)
    j["kappa"] = {{"num", cfg.t_rule.kappa->num()}, {"den", cfg.t_rule.kappa->den()}};
  j["trials"] = cfg.trials;
  j["seed"] = cfg.seed;
  j["workers"] = cfg.workers;
  j["cells"] = res.cells.size();
  j["successes_confirmed"] = res.successes_confirmed;
  j["wall_time_s"] = res.wall_time_s;
  return j.dump(2);
}

// ---------------------------------------------------------------------------
// verify suites
// ---------------------------------------------------------------------------

namespace {

// Oriented triangle 1->2, 2->3, 3->1; all weights 3, ordered diameter 2.
OrientedOrderedGraph cyclic_triangle() {
  OrientedOrderedGraph g;
  g.k = 3;
  g.edges = {{1, 2}, {2, 3}, {3, 1}};
  return g;
}

struct MeanAccumulator {
  double sum = 0.0;
  double sum_sq = 0.0;
  long long count = 0;
  void add(double x) {
    sum += x;
    sum_sq += x * x;
    ++count;
  }
  double mean() const { return sum / static_cast<double>(count); }
  double se() const {
    const double m = mean();
    const double var = std::max(0.0, sum_sq / static_cast<double>(count) - m * m);
    return std::sqrt(var / static_cast<double>(count));
  }
};

}  // namespace

std::vector<VerifySuiteResult> run_verify_suites(uint64_t seed, int scale, int workers) {
  (void)workers;
  std::vector<VerifySuiteResult> suites;

  // Square-count expectation in the t = o(n) regime.
  {
    const long long n = 10000, t = 300;
    const int x = 2;
    const long long trials = 400LL * scale;
    MeanAccumulator acc;
    PassiveStrategy passive;
    for (long long i = 0; i < trials; ++i) {
      ProcessConfig cfg{static_cast<int>(n), 1, 2, derive_seed(seed, i), t};
      RunResult rr = run(cfg, passive);
      const auto hist = square_histogram(rr.state);
      const auto it = hist.find(x);
      acc.add(it == hist.end() ? 0.0 : static_cast<double>(it->second));
    }
    const double expected = lemma21_expectation(n, t, x);
    VerifySuiteResult r;
    r.name = "square_count_expectation";
    r.observed = acc.mean();
    r.bound = expected;
    r.pass = std::abs(acc.mean() - expected) <= 0.1 * expected + 3.0 * acc.se();
    r.detail = "n=10000 t=300 x=2, tolerance 10% + 3 sigma";
    suites.push_back(r);
  }

  // Homomorphism-count ceiling and k-set ceiling for two strategies.
  const long long n = 1500, t = 150;
  const long long trials = 200LL * scale;
  const Hypergraph k3 = make_clique(3, 2);
  const OrientedOrderedGraph tri = cyclic_triangle();
  const double hom_bound = lemma23_bound(tri, 1, t, n);
  for (const char* name : {"degeneracy", "passive"}) {
    MeanAccumulator hom;
    std::vector<MeanAccumulator> xj(4);
    for (long long i = 0; i < trials; ++i) {
      ProcessConfig cfg{static_cast<int>(n), 1, 2, derive_seed(seed ^ 0x5eedULL, i), t};
      std::unique_ptr<Strategy> strat =
          make_strategy(StrategySpec{name, 8.0, 0, 0}, k3, 1);
      RunResult rr = run(cfg, *strat);
      hom.add(static_cast<double>(ordered_hom_set(tri, 1, rr.state.graph).size()));
      for (int j = 1; j <= 3; ++j)
        xj[j].add(static_cast<double>(count_k_sets_with_j_edges(rr.state.graph, 3, j)));
    }
    VerifySuiteResult r;
    r.name = std::string("hom_set_ceiling_") + name;
    r.observed = hom.mean();
    r.bound = hom_bound;
    r.pass = hom.mean() <= hom_bound + 3.0 * hom.se();
    r.detail = "mean |S(v,G;t)| vs weight bound, K3 cyclic";
    suites.push_back(r);
    for (int j = 1; j <= 3; ++j) {
      const double rhs = lower_bound_rhs(1, 2, 3, 3, n, t, j);
      VerifySuiteResult rj;
      rj.name = std::string("k_set_ceiling_") + name + "_j" + std::to_string(j);
      rj.observed = xj[j].mean();
      rj.bound = rhs;
      rj.pass = xj[j].mean() <= rhs + 3.0 * xj[j].se();
      rj.detail = "mean X_j vs counting bound";
      suites.push_back(rj);
    }
  }

  return suites;
}

std::string verify_report_json(const std::vector<VerifySuiteResult>& suites) {
  json j;
  bool all = true;
  j["suites"] = json::array();
  for (const auto& s : suites) {
    all = all && s.pass;
    j["suites"].push_back({{"name", s.name},
                           {"pass", s.pass},
                           {"observed", s.observed},
                           {"bound", s.bound},
                           {"detail", s.detail}});
  }
  j["pass"] = all;
  return j.dump(2);
}

}  // namespace semirand

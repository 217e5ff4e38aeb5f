#include <benchmark/benchmark.h>

#include "semirand/oracle.hpp"
#include "semirand/patterns.hpp"
#include "semirand/process.hpp"
#include "semirand/strategies.hpp"

using namespace semirand;

namespace {

void BM_process_step_passive(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  PassiveStrategy passive;
  ProcessConfig cfg{n, 2, 3, 1, 1LL << 40};
  passive.begin(cfg);
  ProcessState st(n, 2, 3);
  Rng rng(1);
  for (auto _ : state) step(st, passive, rng);
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_process_step_passive)->Arg(1000)->Arg(100000);

void BM_starplus_round(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  StarplusBuilder builder(2, 3, 4, {});
  ProcessConfig cfg{n, 2, 3, 1, 1LL << 40};
  builder.begin(cfg);
  ProcessState st(n, 2, 3);
  Rng rng(1);
  for (auto _ : state) step(st, builder, rng);
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_starplus_round)->Arg(3000)->Arg(30000);

void BM_k6_round(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  K6Builder builder(8.0);
  ProcessConfig cfg{n, 2, 3, 1, 1LL << 40};
  builder.begin(cfg);
  ProcessState st(n, 2, 3);
  Rng rng(1);
  for (auto _ : state) step(st, builder, rng);
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_k6_round)->Arg(1000);

void BM_contains_copy_k3(benchmark::State& state) {
  const int n = 2000;
  PassiveStrategy passive;
  ProcessConfig cfg{n, 1, 2, 7, 400};
  RunResult rr = run(cfg, passive);
  const Hypergraph k3 = make_clique(3, 2);
  for (auto _ : state) benchmark::DoNotOptimize(contains_copy(rr.state.graph, k3));
}
BENCHMARK(BM_contains_copy_k3);

void BM_count_k_sets(benchmark::State& state) {
  const int n = 2000;
  PassiveStrategy passive;
  ProcessConfig cfg{n, 1, 2, 7, 200};
  RunResult rr = run(cfg, passive);
  for (auto _ : state)
    benchmark::DoNotOptimize(count_k_sets_with_j_edges(rr.state.graph, 3, 2));
}
BENCHMARK(BM_count_k_sets);

}  // namespace

BENCHMARK_MAIN();

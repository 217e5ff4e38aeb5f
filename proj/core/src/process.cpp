#include "semirand/process.hpp"

#include <algorithm>

namespace semirand {

std::vector<Vertex> draw_round(ProcessState& state, Rng& rng) {
  // Partial Fisher-Yates over the persistent pool: uniform over r-subsets,
  // no rejection.
  const int r = state.r;
  std::vector<Vertex> out(r);
  for (int i = 0; i < r; ++i) {
    const uint64_t j = i + rng.below(static_cast<uint64_t>(state.n - i));
    std::swap(state.pool[i], state.pool[j]);
    out[i] = state.pool[i];
  }
  std::sort(out.begin(), out.end());
  return out;
}

void apply_round(ProcessState& state, Strategy& strategy, const std::vector<Vertex>& squares) {
  std::vector<Vertex> circles = strategy.propose(state, squares);
  if (static_cast<int>(circles.size()) != state.s - state.r)
    throw StrategyContractViolation("strategy returned wrong number of circle slots");
  for (Vertex v : circles)
    if (v < 1 || v > state.n)
      throw StrategyContractViolation("strategy proposed a vertex out of range");
  state.graph.add_edge(squares, std::move(circles), state.round + 1);
  for (Vertex v : squares) ++state.square_counts[v];
  ++state.round;
}

void step(ProcessState& state, Strategy& strategy, Rng& rng) {
  apply_round(state, strategy, draw_round(state, rng));
}

RunResult run(const ProcessConfig& cfg, Strategy& strategy, const StepCallback& on_step) {
  cfg.validate();
  Rng rng(cfg.seed);
  ProcessState state(cfg.n, cfg.r, cfg.s);
  strategy.begin(cfg);
  if (strategy.succeeded(state)) return {std::move(state), true, 0};
  bool success = false;
  while (state.round < cfg.t_max) {
    std::vector<Vertex> squares = draw_round(state, rng);
    apply_round(state, strategy, squares);
    if (on_step) on_step(state.round, squares, state.graph.edges().back().circle);
    if (strategy.succeeded(state)) {
      success = true;
      break;
    }
  }
  const long long rounds = state.round;
  return {std::move(state), success, rounds};
}

std::map<int, long long> square_histogram(const ProcessState& state) {
  std::map<int, long long> hist;
  for (Vertex v = 1; v <= state.n; ++v) ++hist[state.square_counts[v]];
  return hist;
}

}  // namespace semirand

#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <stdexcept>
#include <vector>

#include "semirand/hypergraph.hpp"
#include "semirand/rng.hpp"

namespace semirand {

struct ProcessConfig {
  int n = 0;
  int r = 1;
  int s = 2;
  uint64_t seed = 0;
  long long t_max = 0;

  void validate() const {
    if (!(1 <= r && r <= s && s <= n)) throw std::invalid_argument("need 1 <= r <= s <= n");
    if (t_max < 0) throw std::invalid_argument("negative round budget");
  }
};

// Snapshot of a running trial: the evolving hypergraph, the round counter
// and the per-vertex square counts. `pool` backs the rejection-free r-subset
// sampler and is an implementation detail.
struct ProcessState {
  ProcessState(int n, int r, int s)
      : n(n), r(r), s(s), graph(n, s), square_counts(n + 1, 0), pool(n) {
    for (int i = 0; i < n; ++i) pool[i] = i + 1;
  }

  int n, r, s;
  Hypergraph graph;
  long long round = 0;
  std::vector<int> square_counts;
  std::vector<Vertex> pool;
};

// Player interface. Instances are per-trial: begin() resets incremental
// state, propose() sees the read-only state plus the fresh squares and must
// return exactly s-r vertex slots, succeeded() is the incremental success
// detector evaluated after every step.
class Strategy {
 public:
  virtual ~Strategy() = default;
  virtual void begin(const ProcessConfig&) {}
  virtual std::vector<Vertex> propose(const ProcessState& state,
                                      const std::vector<Vertex>& squares) = 0;
  virtual bool succeeded(const ProcessState& state) = 0;
};

struct StrategyContractViolation : std::logic_error {
  using std::logic_error::logic_error;
};

// Uniform r-subset of [n] (sorted), via partial Fisher-Yates over the
// persistent pool.
std::vector<Vertex> draw_round(ProcessState& state, Rng& rng);

// Applies one round with the given squares: asks the strategy, validates the
// reply, appends the edge at time round+1 and updates the square counts.
void apply_round(ProcessState& state, Strategy& strategy, const std::vector<Vertex>& squares);

// draw_round + apply_round.
void step(ProcessState& state, Strategy& strategy, Rng& rng);

struct RunResult {
  ProcessState state;
  bool success = false;
  long long rounds_used = 0;
};

using StepCallback =
    std::function<void(long long round, const std::vector<Vertex>& squares,
                       const std::vector<Vertex>& circles)>;

// Runs a full trial: steps until the strategy reports success or the budget
// is exhausted. succeeded() is also checked before the first step.
RunResult run(const ProcessConfig& cfg, Strategy& strategy, const StepCallback& on_step = {});

// x -> number of vertices carrying exactly x squares.
std::map<int, long long> square_histogram(const ProcessState& state);

}  // namespace semirand

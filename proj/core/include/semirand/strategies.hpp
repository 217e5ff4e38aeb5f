#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "semirand/hypergraph.hpp"
#include "semirand/process.hpp"
#include "semirand/rational.hpp"
#include "semirand/structure.hpp"

namespace semirand {

// Two-phase schedule of the starplus builder. t1 is the whole budget when
// there is no excess, half of it for intermediate excess, and epsilon*t at
// the extremal excess.
struct PhasePlan {
  long long t = 0;
  long long t1 = 0;
  long long t2 = 0;
  double omega = 8.0;
  double omega1 = 1.0;
  double epsilon = 1.0;
  Rational kappa{0, 1};
  long long ell = 0;
  Rational excess_bound{0, 1};
};

PhasePlan make_starplus_plan(int r, int s, int k, long long ell, double omega,
                             long long t_budget);

// Baseline: answers with the fixed lowest s-r vertex ids (empty when r = s).
// With a target pattern set it reports success via containment search, so it
// doubles as an honest do-nothing reference point.
class PassiveStrategy : public Strategy {
 public:
  PassiveStrategy() = default;
  explicit PassiveStrategy(Hypergraph target) : target_(std::move(target)) {}

  void begin(const ProcessConfig& cfg) override;
  std::vector<Vertex> propose(const ProcessState&, const std::vector<Vertex>&) override {
    return sink_;
  }
  bool succeeded(const ProcessState& state) override;

 private:
  std::optional<Hypergraph> target_;
  std::vector<Vertex> sink_;
  bool done_ = false;
};

// Embeds an arbitrary pattern along its degeneracy ordering, one vertex per
// phase, for the r = 1 process. A host vertex that collects its i-th
// in-phase square gets connected to the image of the i-th pattern edge that
// the current pattern vertex closes.
class DegeneracyBuilder : public Strategy {
 public:
  explicit DegeneracyBuilder(Hypergraph pattern);

  void begin(const ProcessConfig& cfg) override;
  std::vector<Vertex> propose(const ProcessState& state, const std::vector<Vertex>& squares) override;
  bool succeeded(const ProcessState&) override { return embedded_ == k_; }

  const std::vector<Vertex>& images() const { return image_; }
  int phase_count() const { return k_; }
  int back_degree(int position) const { return static_cast<int>(back_edges_[position].size()); }

 private:
  void advance_trivial_phases();
  std::vector<Vertex> sink_answer() const { return sink_; }

  Hypergraph pattern_;
  int k_ = 0;
  std::vector<Vertex> order_;                    // degeneracy ordering v_1..v_k
  std::vector<std::vector<int>> back_edges_;     // per position: pattern edge ids closed there

  int n_ = 0;
  long long phase_budget_ = 0;
  std::vector<Vertex> sink_;
  std::vector<Vertex> image_;                    // pattern vertex -> host vertex (0 unset)
  std::vector<char> is_image_;                   // host-side marker
  int next_free_ = 1;
  int phase_ = 1;                                // position currently being embedded
  long long phase_rounds_left_ = 0;
  std::unordered_map<Vertex, int> in_phase_squares_;
  int embedded_ = 0;
  bool dead_ = false;
};

// Two-phase builder for (s, s-r)-starpluses: phase one reserves the top s-r
// vertex ids as the star center and funnels every disjoint random r-set into
// a star edge while watching the random r-graph for cliques on k-s+r
// vertices; phase two completes the surplus edges of a kept edge-disjoint
// clique whenever a designated r-set is drawn.
class StarplusBuilder : public Strategy {
 public:
  // Surplus edges are given over canonical pattern ids: wings 1..q
  // (q = k-s+r), center q+1..k.
  StarplusBuilder(int r, int s, int k, std::vector<std::vector<Vertex>> surplus,
                  double omega = 8.0);

  void begin(const ProcessConfig& cfg) override;
  std::vector<Vertex> propose(const ProcessState& state, const std::vector<Vertex>& squares) override;
  bool succeeded(const ProcessState&) override { return done_; }

  const PhasePlan& plan() const { return plan_; }
  const std::vector<std::vector<Vertex>>& designated() const { return designated_; }
  long long clique_count() const { return static_cast<long long>(cliques_.size()); }
  const std::vector<std::vector<Vertex>>& kept_cliques() const { return kept_verts_; }
  std::vector<Vertex> witness() const;

 private:
  void note_rset(const std::vector<Vertex>& u);
  void select_kept();
  uint64_t pack(const std::vector<Vertex>& xs) const;

  int r_, s_, k_, q_;
  long long ell_;
  double omega_;
  std::vector<std::vector<Vertex>> surplus_;        // canonical ids
  std::vector<std::vector<Vertex>> designated_;     // r-subset per surplus edge (wing ids)
  std::vector<std::vector<Vertex>> surplus_rest_;   // surplus edge minus designated part

  int n_ = 0;
  PhasePlan plan_;
  std::vector<Vertex> sink_;
  std::vector<Vertex> center_hosts_;                // C'

  std::unordered_set<uint64_t> rsets_;
  std::unordered_map<uint64_t, std::vector<Vertex>> completions_;
  std::vector<std::vector<Vertex>> cliques_;        // discovery order

  struct Kept {
    std::vector<Vertex> verts;
    std::unordered_map<uint64_t, std::vector<int>> pending;  // packed r-set -> surplus ids
    long long remaining = 0;
  };
  std::vector<Kept> kept_;
  std::vector<std::vector<Vertex>> kept_verts_;
  std::unordered_map<uint64_t, int> designated_owner_;  // packed r-set -> kept index
  bool selected_ = false;
  bool done_ = false;
  int done_kept_ = -1;
};

// K6^(3) builder for r = 2: phase one answers the first hit of a pair with
// one apex and the second hit with the other, hunting for doubled K4s; phase
// two walks the 4-cycle of a kept double clique and joins each of its
// vertices to both apexes.
class K6Builder : public Strategy {
 public:
  explicit K6Builder(double omega = 8.0);

  void begin(const ProcessConfig& cfg) override;
  std::vector<Vertex> propose(const ProcessState& state, const std::vector<Vertex>& squares) override;
  bool succeeded(const ProcessState&) override { return done_; }

  long long phase1_rounds() const { return t1_; }
  long long kept_count() const { return static_cast<long long>(kept_.size()); }
  std::vector<Vertex> witness() const;

 private:
  uint64_t pack_pair(Vertex a, Vertex b) const;
  void register_double(Vertex a, Vertex b);
  void try_keep(const std::array<Vertex, 4>& quad);

  double omega_;
  int n_ = 0;
  long long t1_ = 0;
  std::vector<Vertex> sink_;

  std::unordered_map<uint64_t, int> pair_hits_;
  std::unordered_map<Vertex, std::vector<Vertex>> dneigh_;  // doubled-pair adjacency

  struct Kept {
    std::array<Vertex, 4> verts;  // sorted; cycle order a1 a2 a3 a4 a1
    int progress = 0;             // 4 cycle edges + 4 apex edges
    std::array<char, 4> cycle_done{0, 0, 0, 0};
  };
  std::vector<Kept> kept_;
  struct CycleSlot {
    int kept = 0;
    int bit = 0;
    Vertex answer = 0;
  };
  std::unordered_map<uint64_t, CycleSlot> cycle_pairs_;
  std::unordered_map<Vertex, std::vector<int>> member_of_;
  std::unordered_set<Vertex> apex_edge_done_;
  bool done_ = false;
  int done_kept_ = -1;
};

// Loose-cycle builder. For r <= s-2*ell it grows the path greedily and
// closes it, finishing in m rounds when every random set misses the
// structure. For r = s-2*ell+2 it runs the three-phase plan: fix the path
// P_{m-3} and its end sets, grow two families of pendant edges, then wait
// for a random set that touches both families (or one family twice).
class LooseCycleBuilder : public Strategy {
 public:
  LooseCycleBuilder(int r, int s, int ell, int m);

  void begin(const ProcessConfig& cfg) override;
  std::vector<Vertex> propose(const ProcessState& state, const std::vector<Vertex>& squares) override;
  bool succeeded(const ProcessState&) override { return done_; }

  long long rounds_to_success() const { return success_round_; }

 private:
  bool immediate_mode() const { return r_ <= s_ - 2 * ell_; }
  std::vector<Vertex> take_fresh(int count, const std::vector<Vertex>& avoid);
  bool touches_structure(const std::vector<Vertex>& u) const;
  void mark_used(const std::vector<Vertex>& vs);

  int r_, s_, ell_, m_;

  int n_ = 0;
  long long t_max_ = 0;
  std::vector<Vertex> sink_;
  std::vector<char> used_;
  int fresh_cursor_ = 0;

  // shared path state
  int path_edges_ = 0;
  std::vector<Vertex> head_free_;  // degree-one vertices of the first edge
  std::vector<Vertex> tail_free_;  // degree-one vertices of the last edge

  // three-phase state
  int phase_ = 1;
  long long phase2_end_ = 0;
  std::vector<Vertex> L1_, L2_;            // L0 lives in L1_ when m == 3
  struct Pendant {
    std::vector<Vertex> free;  // edge minus its L-set
  };
  std::vector<Pendant> E1_, E2_;
  std::unordered_map<Vertex, std::pair<int, int>> pendant_at_;  // vertex -> (side, index)
  bool alternate_ = false;

  bool done_ = false;
  long long success_round_ = -1;
};

// Strategy selection by name + parameter block, as used by experiment
// configs: "passive", "degeneracy", "starplus", "k6", "loose_cycle".
struct StrategySpec {
  std::string name;
  double omega = 8.0;
  // loose_cycle parameters
  int ell = 0;
  int m = 0;
};

std::unique_ptr<Strategy> make_strategy(const StrategySpec& spec, const Hypergraph& pattern,
                                        int r);

// Design threshold exponent of a named strategy against a pattern, used by
// the t = c * n^kappa sweep rule.
Rational auto_kappa(const StrategySpec& spec, const Hypergraph& pattern, int r);

}  // namespace semirand

#include "semirand/strategies.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "semirand/log.hpp"
#include "semirand/oracle.hpp"
#include "semirand/patterns.hpp"

namespace semirand {

namespace {

std::vector<Vertex> lowest_ids(int count) {
  std::vector<Vertex> out(count);
  for (int i = 0; i < count; ++i) out[i] = i + 1;
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// PhasePlan
// ---------------------------------------------------------------------------

PhasePlan make_starplus_plan(int r, int s, int k, long long ell, double omega,
                             long long t_budget) {
  if (ell < 0) throw std::invalid_argument("negative excess");
  PhasePlan plan;
  plan.t = t_budget;
  plan.omega = omega;
  plan.ell = ell;
  plan.kappa = exponent_starplus(r, s, k, ell).exponent;
  const long long q = k - s + r;
  const double b = static_cast<double>(binom(q, r));
  plan.omega1 = std::pow(omega, static_cast<double>(ell) / (2.0 * b));
  plan.epsilon = std::pow(omega, -1.0 - static_cast<double>(ell) / (2.0 * b));
  if (k > s) plan.excess_bound = starplus_excess_bound(r, s, k);

  if (ell == 0) {
    plan.t1 = t_budget;
  } else if (k > s && Rational(ell) == plan.excess_bound) {
    plan.t1 = std::min<long long>(
        t_budget, std::max<long long>(1, std::llround(plan.epsilon * static_cast<double>(t_budget))));
  } else {
    plan.t1 = t_budget / 2;
  }
  plan.t2 = plan.t - plan.t1;
  return plan;
}

// ---------------------------------------------------------------------------
// PassiveStrategy
// ---------------------------------------------------------------------------

void PassiveStrategy::begin(const ProcessConfig& cfg) {
  if (target_ && target_->s() != cfg.s)
    throw std::invalid_argument("passive target uniformity mismatch");
  sink_ = lowest_ids(cfg.s - cfg.r);
  done_ = false;
}

bool PassiveStrategy::succeeded(const ProcessState& state) {
  if (!target_) return false;
  if (!done_) done_ = contains_copy(state.graph, *target_);
  return done_;
}

// ---------------------------------------------------------------------------
// DegeneracyBuilder
// ---------------------------------------------------------------------------

DegeneracyBuilder::DegeneracyBuilder(Hypergraph pattern) : pattern_(std::move(pattern)) {
  k_ = pattern_.n();
  const DegeneracyResult deg = degeneracy(pattern_);
  order_ = deg.ordering;
  std::vector<int> position(k_ + 1, 0);
  for (int i = 0; i < k_; ++i) position[order_[i]] = i + 1;
  // A pattern edge is closed in the phase of its last vertex in the
  // ordering; the degeneracy ordering caps the number of such edges at d.
  back_edges_.assign(k_ + 1, {});
  for (size_t ei = 0; ei < pattern_.edges().size(); ++ei) {
    int last = 0;
    for (Vertex v : pattern_.edges()[ei].support()) last = std::max(last, position[v]);
    back_edges_[last].push_back(static_cast<int>(ei));
  }
}

void DegeneracyBuilder::begin(const ProcessConfig& cfg) {
  if (cfg.r != 1) throw std::invalid_argument("degeneracy builder needs r = 1");
  if (cfg.s != pattern_.s()) throw std::invalid_argument("pattern uniformity mismatch");
  if (cfg.n < k_ + cfg.s) throw std::invalid_argument("host too small for pattern");
  n_ = cfg.n;
  phase_budget_ = k_ > 0 ? cfg.t_max / k_ : 0;
  sink_ = lowest_ids(cfg.s - 1);
  image_.assign(k_ + 1, 0);
  is_image_.assign(n_ + 1, 0);
  next_free_ = 1;
  phase_ = 1;
  phase_rounds_left_ = phase_budget_;
  in_phase_squares_.clear();
  embedded_ = 0;
  dead_ = false;
  advance_trivial_phases();
}

void DegeneracyBuilder::advance_trivial_phases() {
  while (phase_ <= k_ && back_edges_[phase_].empty()) {
    while (next_free_ <= n_ && is_image_[next_free_]) ++next_free_;
    const Vertex host = next_free_++;
    image_[order_[phase_ - 1]] = host;
    is_image_[host] = 1;
    ++embedded_;
    ++phase_;
    phase_rounds_left_ = phase_budget_;
    in_phase_squares_.clear();
  }
}

std::vector<Vertex> DegeneracyBuilder::propose(const ProcessState&, const std::vector<Vertex>& squares) {
  if (dead_ || phase_ > k_) return sink_answer();
  const Vertex z = squares[0];
  std::vector<Vertex> answer = sink_answer();

  if (!is_image_[z]) {
    const Vertex pv = order_[phase_ - 1];
    const auto& closing = back_edges_[phase_];
    const int h = static_cast<int>(closing.size());
    const int count = ++in_phase_squares_[z];
    if (count <= h) {
      // The i-th square on a candidate completes the image of the i-th
      // pattern edge closed in this phase; extra occurrences of the phase
      // vertex inside a multiset edge fall onto the candidate itself.
      const auto& pe = pattern_.edges()[closing[count - 1]].all();
      answer.clear();
      bool self_seen = false;
      for (Vertex u : pe) {
        if (u == pv && !self_seen) {
          self_seen = true;
          continue;
        }
        answer.push_back(u == pv ? z : image_[u]);
      }
      if (count == h) {
        image_[pv] = z;
        is_image_[z] = 1;
        ++embedded_;
        ++phase_;
        phase_rounds_left_ = phase_budget_;
        in_phase_squares_.clear();
        advance_trivial_phases();
        return answer;
      }
    }
  }

  if (--phase_rounds_left_ <= 0) dead_ = true;
  return answer;
}

// ---------------------------------------------------------------------------
// StarplusBuilder
// ---------------------------------------------------------------------------

StarplusBuilder::StarplusBuilder(int r, int s, int k, std::vector<std::vector<Vertex>> surplus,
                                 double omega)
    : r_(r), s_(s), k_(k), q_(k - s + r), ell_(static_cast<long long>(surplus.size())),
      omega_(omega), surplus_(std::move(surplus)) {
  if (!(2 <= r_ && r_ < s_ && s_ <= k_)) throw std::invalid_argument("need 2 <= r < s <= k");
  for (auto& e : surplus_) {
    if (static_cast<int>(e.size()) != s_) throw std::invalid_argument("surplus edge of wrong size");
    std::sort(e.begin(), e.end());
    if (std::adjacent_find(e.begin(), e.end()) != e.end())
      throw std::invalid_argument("surplus edges must be simple");
    for (Vertex v : e)
      if (v < 1 || v > k_) throw std::invalid_argument("surplus vertex out of range");
    int wing = 0;
    for (Vertex v : e)
      if (v <= q_) ++wing;
    if (wing < r_)
      throw std::invalid_argument("surplus edge lacks an r-subset outside the center");
  }
  // Designated r-set per surplus edge: lexicographically smallest r-subset
  // avoiding the center (which always exists since the edge never contains
  // the whole center).
  for (const auto& e : surplus_) {
    std::vector<Vertex> wings;
    for (Vertex v : e)
      if (v <= q_) wings.push_back(v);
    std::vector<Vertex> des(wings.begin(), wings.begin() + r_);
    designated_.push_back(des);
    std::vector<Vertex> rest;
    std::set_difference(e.begin(), e.end(), des.begin(), des.end(), std::back_inserter(rest));
    surplus_rest_.push_back(rest);
  }
}

uint64_t StarplusBuilder::pack(const std::vector<Vertex>& xs) const {
  uint64_t key = 0;
  for (Vertex v : xs) key = (key << 16) | static_cast<uint64_t>(v);
  return key;
}

void StarplusBuilder::begin(const ProcessConfig& cfg) {
  if (cfg.r != r_ || cfg.s != s_) throw std::invalid_argument("process shape mismatch");
  if (cfg.n < k_ + s_) throw std::invalid_argument("host too small for pattern");
  if (cfg.n >= (1 << 16) && r_ >= 4)
    throw std::invalid_argument("r-set packing supports r = 4 only for n < 65536");
  if (omega_ > std::log(static_cast<double>(cfg.n)))
    log_warn("omega=%g exceeds log n = %g; the plan leaves the intended regime", omega_,
             std::log(static_cast<double>(cfg.n)));
  n_ = cfg.n;
  plan_ = make_starplus_plan(r_, s_, k_, ell_, omega_, cfg.t_max);
  sink_ = lowest_ids(s_ - r_);
  center_hosts_.clear();
  for (int i = s_ - r_; i >= 1; --i) center_hosts_.push_back(n_ - i + 1);
  rsets_.clear();
  completions_.clear();
  cliques_.clear();
  kept_.clear();
  kept_verts_.clear();
  designated_owner_.clear();
  selected_ = false;
  done_ = false;
  done_kept_ = -1;
}

void StarplusBuilder::note_rset(const std::vector<Vertex>& u) {
  const uint64_t key = pack(u);
  if (!rsets_.insert(key).second) return;

  // New distinct r-set: find the cliques on q vertices it completes.
  std::vector<std::vector<Vertex>> found;
  if (q_ == r_) {
    found.push_back(u);
  } else {
    // Candidates must extend every (r-1)-subset of u to a known r-set.
    std::vector<Vertex> cand;
    {
      std::vector<Vertex> sub(u.begin() + 1, u.end());  // drop u[0]
      auto it = completions_.find(pack(sub));
      if (it != completions_.end()) cand = it->second;
    }
    std::vector<Vertex> filtered;
    for (Vertex x : cand) {
      if (std::binary_search(u.begin(), u.end(), x)) continue;
      bool ok = true;
      for (size_t skip = 0; skip < u.size() && ok; ++skip) {
        std::vector<Vertex> probe;
        probe.reserve(r_);
        for (size_t i = 0; i < u.size(); ++i)
          if (i != skip) probe.push_back(u[i]);
        probe.push_back(x);
        std::sort(probe.begin(), probe.end());
        ok = rsets_.count(pack(probe)) > 0;
      }
      if (ok) filtered.push_back(x);
    }
    std::sort(filtered.begin(), filtered.end());

    // Every (q-r)-subset of the common completions whose internal r-sets
    // are also present closes a clique.
    const int need = q_ - r_;
    std::vector<Vertex> T;
    std::function<void(size_t)> rec = [&](size_t start) {
      if (static_cast<int>(T.size()) == need) {
        std::vector<Vertex> W;
        W.reserve(q_);
        std::merge(u.begin(), u.end(), T.begin(), T.end(), std::back_inserter(W));
        std::vector<Vertex> probe(r_);
        std::vector<int> sel(r_);
        std::function<bool(int, int)> all_in = [&](int start2, int depth) -> bool {
          if (depth == r_) {
            for (int i = 0; i < r_; ++i) probe[i] = W[sel[i]];
            return rsets_.count(pack(probe)) > 0;
          }
          for (int i = start2; i <= q_ - (r_ - depth); ++i) {
            sel[depth] = i;
            if (!all_in(i + 1, depth + 1)) return false;
          }
          return true;
        };
        if (all_in(0, 0)) found.push_back(W);
        return;
      }
      for (size_t i = start; i < filtered.size(); ++i) {
        if (filtered.size() - i < need - T.size()) break;
        T.push_back(filtered[i]);
        rec(i + 1);
        T.pop_back();
      }
    };
    rec(0);
  }

  for (auto& W : found) cliques_.push_back(std::move(W));

  // Feed the completion index after detection so the new set is not its own
  // completion.
  for (size_t skip = 0; skip < u.size(); ++skip) {
    std::vector<Vertex> sub;
    sub.reserve(r_ - 1);
    for (size_t i = 0; i < u.size(); ++i)
      if (i != skip) sub.push_back(u[i]);
    completions_[pack(sub)].push_back(u[skip]);
  }
}

void StarplusBuilder::select_kept() {
  selected_ = true;
  // Greedy scan in discovery order; keep a copy iff it shares no r-set
  // (equivalently, at most r-1 vertices) with anything already kept.
  for (const auto& W : cliques_) {
    bool disjoint = true;
    for (const auto& kept : kept_) {
      int shared = 0;
      for (Vertex v : W)
        if (std::binary_search(kept.verts.begin(), kept.verts.end(), v)) ++shared;
      if (shared >= r_) { disjoint = false; break; }
    }
    if (!disjoint) continue;
    Kept kept;
    kept.verts = W;
    kept.remaining = ell_;
    const int idx = static_cast<int>(kept_.size());
    for (size_t j = 0; j < designated_.size(); ++j) {
      std::vector<Vertex> host(r_);
      for (int i = 0; i < r_; ++i) host[i] = W[designated_[j][i] - 1];
      std::sort(host.begin(), host.end());
      const uint64_t key = pack(host);
      kept.pending[key].push_back(static_cast<int>(j));
      designated_owner_[key] = idx;
    }
    kept_.push_back(std::move(kept));
    kept_verts_.push_back(W);
  }
}

std::vector<Vertex> StarplusBuilder::propose(const ProcessState& state,
                                             const std::vector<Vertex>& squares) {
  const long long round = state.round + 1;

  if (round <= plan_.t1) {
    for (Vertex v : squares)
      if (v > n_ - (s_ - r_)) return sink_;  // touched the reserved center
    note_rset(squares);
    if (ell_ == 0 && !done_ && !cliques_.empty()) {
      done_ = true;
      done_kept_ = 0;
      if (kept_verts_.empty()) kept_verts_.push_back(cliques_.front());
    }
    return center_hosts_;
  }

  if (ell_ == 0) return sink_;  // single-phase plan; budget past t1 is idle
  if (!selected_) select_kept();
  if (done_) return sink_;

  const uint64_t key = pack(squares);
  auto owner = designated_owner_.find(key);
  if (owner == designated_owner_.end()) return sink_;
  Kept& kept = kept_[owner->second];
  auto pending = kept.pending.find(key);
  if (pending == kept.pending.end() || pending->second.empty()) return sink_;
  const int j = pending->second.back();
  pending->second.pop_back();

  std::vector<Vertex> answer;
  answer.reserve(s_ - r_);
  for (Vertex pv : surplus_rest_[j])
    answer.push_back(pv <= q_ ? kept.verts[pv - 1] : center_hosts_[pv - q_ - 1]);
  if (--kept.remaining == 0) {
    done_ = true;
    done_kept_ = owner->second;
  }
  return answer;
}

std::vector<Vertex> StarplusBuilder::witness() const {
  if (done_kept_ < 0) return {};
  std::vector<Vertex> out =
      ell_ == 0 ? kept_verts_.front() : kept_[done_kept_].verts;
  out.insert(out.end(), center_hosts_.begin(), center_hosts_.end());
  return out;
}

// ---------------------------------------------------------------------------
// K6Builder
// ---------------------------------------------------------------------------

K6Builder::K6Builder(double omega) : omega_(omega) {
  if (omega <= 0) throw std::invalid_argument("omega must be positive");
}

uint64_t K6Builder::pack_pair(Vertex a, Vertex b) const {
  if (a > b) std::swap(a, b);
  return (static_cast<uint64_t>(a) << 32) | static_cast<uint64_t>(b);
}

void K6Builder::begin(const ProcessConfig& cfg) {
  if (cfg.r != 2 || cfg.s != 3) throw std::invalid_argument("K6 builder needs r = 2, s = 3");
  if (cfg.n < 8) throw std::invalid_argument("K6 builder needs n >= 8");
  n_ = cfg.n;
  t1_ = std::min<long long>(
      cfg.t_max,
      static_cast<long long>(std::floor(std::pow(static_cast<double>(n_), 9.0 / 5.0) /
                                        std::sqrt(omega_))));
  sink_ = {1};
  pair_hits_.clear();
  dneigh_.clear();
  kept_.clear();
  cycle_pairs_.clear();
  member_of_.clear();
  apex_edge_done_.clear();
  done_ = false;
  done_kept_ = -1;
}

void K6Builder::try_keep(const std::array<Vertex, 4>& quad) {
  // Edge-disjoint for pairs means sharing at most one vertex.
  for (const auto& kept : kept_) {
    int shared = 0;
    for (Vertex v : quad)
      for (Vertex u : kept.verts)
        if (u == v) ++shared;
    if (shared >= 2) return;
  }
  const int idx = static_cast<int>(kept_.size());
  Kept kept;
  kept.verts = quad;
  kept_.push_back(kept);
  for (int j = 0; j < 4; ++j) {
    const Vertex a = quad[j], b = quad[(j + 1) % 4];
    cycle_pairs_[pack_pair(a, b)] = {idx, j, quad[(j + 2) % 4]};
    member_of_[quad[j]].push_back(idx);
  }
}

void K6Builder::register_double(Vertex a, Vertex b) {
  auto& na = dneigh_[a];
  auto& nb = dneigh_[b];
  // Common doubled neighbours of a and b, then doubled pairs among them.
  std::vector<Vertex> common;
  const auto& small = na.size() < nb.size() ? na : nb;
  const auto& big = na.size() < nb.size() ? nb : na;
  for (Vertex x : small)
    if (std::find(big.begin(), big.end(), x) != big.end()) common.push_back(x);
  for (size_t i = 0; i < common.size(); ++i)
    for (size_t j = i + 1; j < common.size(); ++j) {
      const Vertex z = common[i], w = common[j];
      if (pair_hits_[pack_pair(z, w)] < 2) continue;
      std::array<Vertex, 4> quad{a, b, z, w};
      std::sort(quad.begin(), quad.end());
      try_keep(quad);
    }
  na.push_back(b);
  nb.push_back(a);
}

std::vector<Vertex> K6Builder::propose(const ProcessState& state,
                                       const std::vector<Vertex>& squares) {
  const long long round = state.round + 1;
  const Vertex x = squares[0], y = squares[1];

  if (round <= t1_) {
    if (y > n_ - 2) return sink_;  // pair touches an apex
    const int hits = ++pair_hits_[pack_pair(x, y)];
    if (hits == 1) return {n_ - 1};
    if (hits == 2) {
      register_double(x, y);
      return {n_};
    }
    return sink_;
  }

  if (done_) return sink_;

  if (y <= n_ - 2) {
    auto it = cycle_pairs_.find(pack_pair(x, y));
    if (it == cycle_pairs_.end()) return sink_;
    Kept& kept = kept_[it->second.kept];
    if (kept.cycle_done[it->second.bit]) return sink_;
    kept.cycle_done[it->second.bit] = 1;
    if (++kept.progress == 8) {
      done_ = true;
      done_kept_ = it->second.kept;
    }
    return {it->second.answer};
  }

  if (x <= n_ - 2 && y >= n_ - 1) {
    auto members = member_of_.find(x);
    if (members == member_of_.end() || apex_edge_done_.count(x)) return sink_;
    apex_edge_done_.insert(x);
    for (int idx : members->second) {
      if (++kept_[idx].progress == 8 && !done_) {
        done_ = true;
        done_kept_ = idx;
      }
    }
    return {y == n_ - 1 ? n_ : n_ - 1};
  }

  return sink_;  // the pair {n-1, n} itself is unusable
}

std::vector<Vertex> K6Builder::witness() const {
  if (done_kept_ < 0) return {};
  std::vector<Vertex> out(kept_[done_kept_].verts.begin(), kept_[done_kept_].verts.end());
  out.push_back(n_ - 1);
  out.push_back(n_);
  return out;
}

// ---------------------------------------------------------------------------
// LooseCycleBuilder
// ---------------------------------------------------------------------------

LooseCycleBuilder::LooseCycleBuilder(int r, int s, int ell, int m)
    : r_(r), s_(s), ell_(ell), m_(m) {
  if (!(ell_ >= 2 && m_ >= 3 && 2 * ell_ <= s_))
    throw std::invalid_argument("loose cycle needs ell >= 2, m >= 3, ell <= s/2");
  if (r_ > s_ - ell_) throw std::invalid_argument("loose cycle builder needs r <= s - ell");
  if (!(r_ <= s_ - 2 * ell_ || r_ == s_ - 2 * ell_ + 2))
    throw std::invalid_argument("unsupported (r, s, ell) combination");
}

void LooseCycleBuilder::begin(const ProcessConfig& cfg) {
  if (cfg.r != r_ || cfg.s != s_) throw std::invalid_argument("process shape mismatch");
  const int k = (s_ - ell_) * m_;
  if (cfg.n < 4 * k + s_) throw std::invalid_argument("host too small for pattern");
  n_ = cfg.n;
  t_max_ = cfg.t_max;
  sink_ = lowest_ids(s_ - r_);
  used_.assign(n_ + 1, 0);
  fresh_cursor_ = n_;
  path_edges_ = 0;
  head_free_.clear();
  tail_free_.clear();
  phase_ = 1;
  phase2_end_ = 0;
  L1_.clear();
  L2_.clear();
  E1_.clear();
  E2_.clear();
  pendant_at_.clear();
  alternate_ = false;
  done_ = false;
  success_round_ = -1;

  if (!immediate_mode() && m_ == 3) {
    // No path to build: fix L0 up front and go straight to growing E0.
    L1_ = take_fresh(ell_, {});
    phase_ = 2;
    phase2_end_ = t_max_ / 2;
  }
}

std::vector<Vertex> LooseCycleBuilder::take_fresh(int count, const std::vector<Vertex>& avoid) {
  std::vector<Vertex> out;
  while (static_cast<int>(out.size()) < count) {
    while (fresh_cursor_ >= 1 &&
           (used_[fresh_cursor_] ||
            std::find(avoid.begin(), avoid.end(), fresh_cursor_) != avoid.end()))
      --fresh_cursor_;
    if (fresh_cursor_ < 1) throw std::runtime_error("ran out of fresh vertices");
    out.push_back(fresh_cursor_);
    used_[fresh_cursor_] = 1;
  }
  return out;
}

bool LooseCycleBuilder::touches_structure(const std::vector<Vertex>& u) const {
  for (Vertex v : u)
    if (used_[v]) return true;
  return false;
}

void LooseCycleBuilder::mark_used(const std::vector<Vertex>& vs) {
  for (Vertex v : vs) used_[v] = 1;
}

std::vector<Vertex> LooseCycleBuilder::propose(const ProcessState& state,
                                               const std::vector<Vertex>& squares) {
  const long long round = state.round + 1;
  if (done_) return sink_;

  if (immediate_mode()) {
    if (touches_structure(squares)) return sink_;
    if (path_edges_ == 0) {
      std::vector<Vertex> fresh = take_fresh(s_ - r_, squares);
      mark_used(squares);
      head_free_ = squares;
      head_free_.insert(head_free_.end(), fresh.begin(), fresh.end());
      tail_free_ = head_free_;
      path_edges_ = 1;
      return fresh;
    }
    if (path_edges_ < m_ - 1) {
      // Extend the tail: ell old degree-one vertices + fresh ones.
      std::vector<Vertex> overlap(tail_free_.begin(), tail_free_.begin() + ell_);
      if (path_edges_ == 1) {
        // The head keeps what the first extension did not consume.
        head_free_.assign(tail_free_.begin() + ell_, tail_free_.end());
      }
      std::vector<Vertex> fresh = take_fresh(s_ - ell_ - r_, squares);
      mark_used(squares);
      std::vector<Vertex> answer = overlap;
      answer.insert(answer.end(), fresh.begin(), fresh.end());
      tail_free_ = squares;
      tail_free_.insert(tail_free_.end(), fresh.begin(), fresh.end());
      ++path_edges_;
      return answer;
    }
    // Closing edge: ell degree-one vertices from each end.
    std::vector<Vertex> answer(head_free_.begin(), head_free_.begin() + ell_);
    answer.insert(answer.end(), tail_free_.begin(), tail_free_.begin() + ell_);
    std::vector<Vertex> fresh = take_fresh(s_ - 2 * ell_ - r_, squares);
    answer.insert(answer.end(), fresh.begin(), fresh.end());
    mark_used(squares);
    ++path_edges_;
    done_ = true;
    success_round_ = round;
    return answer;
  }

  // r = s - 2*ell + 2: three phases.
  if (phase_ == 1) {
    if (touches_structure(squares)) return sink_;
    if (path_edges_ == 0) {
      std::vector<Vertex> fresh = take_fresh(s_ - r_, squares);
      mark_used(squares);
      head_free_ = squares;
      head_free_.insert(head_free_.end(), fresh.begin(), fresh.end());
      std::sort(head_free_.begin(), head_free_.end());
      tail_free_ = head_free_;
      path_edges_ = 1;
      if (m_ == 4) {
        // Single-edge path: two disjoint ell-subsets of it.
        L1_.assign(head_free_.begin(), head_free_.begin() + ell_);
        L2_.assign(head_free_.begin() + ell_, head_free_.begin() + 2 * ell_);
        phase_ = 2;
        phase2_end_ = round + (t_max_ - round) / 2;
      }
      return fresh;
    }
    if (path_edges_ < m_ - 3) {
      std::vector<Vertex> overlap(tail_free_.begin(), tail_free_.begin() + ell_);
      if (path_edges_ == 1) head_free_.assign(tail_free_.begin() + ell_, tail_free_.end());
      std::vector<Vertex> fresh = take_fresh(s_ - ell_ - r_, squares);
      mark_used(squares);
      std::vector<Vertex> answer = overlap;
      answer.insert(answer.end(), fresh.begin(), fresh.end());
      tail_free_ = squares;
      tail_free_.insert(tail_free_.end(), fresh.begin(), fresh.end());
      ++path_edges_;
      if (path_edges_ == m_ - 3) {
        L1_.assign(head_free_.begin(), head_free_.begin() + ell_);
        L2_.assign(tail_free_.begin(), tail_free_.begin() + ell_);
        phase_ = 2;
        phase2_end_ = round + (t_max_ - round) / 2;
      }
      return answer;
    }
    // m >= 5 reaches here only via the transition above.
    return sink_;
  }

  if (phase_ == 2) {
    if (round > phase2_end_) {
      phase_ = 3;
    } else {
      if (touches_structure(squares)) return sink_;
      const bool to_first = m_ == 3 ? true : !alternate_;
      alternate_ = !alternate_;
      const std::vector<Vertex>& L = to_first ? L1_ : L2_;
      std::vector<Vertex> fresh = take_fresh(ell_ - 2, squares);
      mark_used(squares);
      Pendant p;
      p.free = squares;
      p.free.insert(p.free.end(), fresh.begin(), fresh.end());
      auto& family = to_first ? E1_ : E2_;
      const int side = to_first ? 1 : 2;
      for (Vertex v : p.free) pendant_at_[v] = {side, static_cast<int>(family.size())};
      family.push_back(std::move(p));
      std::vector<Vertex> answer = L;
      answer.insert(answer.end(), fresh.begin(), fresh.end());
      return answer;
    }
  }

  // Phase 3: wait for a useful random set.
  std::vector<std::pair<int, int>> hits;  // (side, index)
  int outside = 0;
  for (Vertex v : squares) {
    auto it = pendant_at_.find(v);
    if (it != pendant_at_.end())
      hits.push_back(it->second);
    else if (used_[v])
      return sink_;  // touches the path or an L-set
    else
      ++outside;
  }
  if (hits.size() != 2) return sink_;

  auto collect = [&](const Pendant& p, Vertex skip1, Vertex skip2, int want) {
    std::vector<Vertex> out;
    for (Vertex v : p.free) {
      if (v == skip1 || v == skip2) continue;
      if (static_cast<int>(out.size()) < want) out.push_back(v);
    }
    return out;
  };
  // hits and hit1/hit2 are both collected in square order, so hit1 belongs
  // to hits[0].
  Vertex hit1 = 0, hit2 = 0;
  for (Vertex v : squares)
    if (pendant_at_.count(v)) (hit1 == 0 ? hit1 : hit2) = v;

  std::vector<Vertex> answer;
  if (hits[0].first != hits[1].first) {
    // One pendant edge from each family: take ell-1 further vertices of each.
    const Pendant& a = (hits[0].first == 1 ? E1_ : E2_)[hits[0].second];
    const Pendant& b = (hits[1].first == 1 ? E1_ : E2_)[hits[1].second];
    auto part1 = collect(a, hit1, 0, ell_ - 1);
    auto part2 = collect(b, hit2, 0, ell_ - 1);
    answer = part1;
    answer.insert(answer.end(), part2.begin(), part2.end());
  } else if (hits[0].second == hits[1].second) {
    // Both hits inside one pendant edge: ell-2 more of it and ell from the
    // other family (m = 3: any other pendant edge).
    const int side = hits[0].first;
    const auto& same = (side == 1 ? E1_ : E2_)[hits[0].second];
    const auto& other_family = m_ == 3 ? E1_ : (side == 1 ? E2_ : E1_);
    int other_idx = -1;
    for (size_t i = 0; i < other_family.size(); ++i) {
      if (m_ == 3 && static_cast<int>(i) == hits[0].second) continue;
      other_idx = static_cast<int>(i);
      break;
    }
    if (other_idx < 0) return sink_;
    auto part1 = collect(same, hit1, hit2, ell_ - 2);
    auto part2 = collect(other_family[other_idx], 0, 0, ell_);
    answer = part1;
    answer.insert(answer.end(), part2.begin(), part2.end());
  } else if (m_ == 3) {
    // Two different pendant edges of the single family.
    const auto& a = E1_[hits[0].second];
    const auto& b = E1_[hits[1].second];
    auto part1 = collect(a, hit1, 0, ell_ - 1);
    auto part2 = collect(b, hit2, 0, ell_ - 1);
    answer = part1;
    answer.insert(answer.end(), part2.begin(), part2.end());
  } else {
    return sink_;  // two distinct edges of the same family close nothing
  }

  if (static_cast<int>(answer.size()) != s_ - r_) return sink_;
  done_ = true;
  success_round_ = round;
  return answer;
}

// ---------------------------------------------------------------------------
// Factory
// ---------------------------------------------------------------------------

std::unique_ptr<Strategy> make_strategy(const StrategySpec& spec, const Hypergraph& pattern,
                                        int r) {
  if (spec.name == "passive") return std::make_unique<PassiveStrategy>(pattern);
  if (spec.name == "degeneracy") return std::make_unique<DegeneracyBuilder>(pattern);
  if (spec.name == "k6") return std::make_unique<K6Builder>(spec.omega);
  if (spec.name == "starplus") {
    const StarplusShape shape = decompose_starplus(pattern, r);
    if (!shape.star_is_full)
      throw std::invalid_argument("pattern is not a full starplus for this r");
    // Canonicalize: wings sorted to 1..q, center to q+1..k.
    const int s = pattern.s();
    const int q = shape.k - s + r;
    std::vector<int> relabel(shape.k + 1, 0);
    int next_wing = 1;
    for (Vertex v = 1; v <= shape.k; ++v)
      if (std::find(shape.center.begin(), shape.center.end(), v) == shape.center.end())
        relabel[v] = next_wing++;
    int next_center = q + 1;
    for (Vertex v : shape.center) relabel[v] = next_center++;
    std::vector<std::vector<Vertex>> surplus;
    for (const auto& e : shape.surplus) {
      std::vector<Vertex> mapped;
      for (Vertex v : e) mapped.push_back(relabel[v]);
      std::sort(mapped.begin(), mapped.end());
      surplus.push_back(std::move(mapped));
    }
    return std::make_unique<StarplusBuilder>(r, s, shape.k, std::move(surplus), spec.omega);
  }
  if (spec.name == "loose_cycle")
    return std::make_unique<LooseCycleBuilder>(r, pattern.s(), spec.ell, spec.m);
  throw std::invalid_argument("unknown strategy: " + spec.name);
}

Rational auto_kappa(const StrategySpec& spec, const Hypergraph& pattern, int r) {
  if (spec.name == "degeneracy" || spec.name == "passive")
    return exponent_degeneracy(degeneracy(pattern).d);
  if (spec.name == "k6") return k6_design_exponent();
  if (spec.name == "starplus") {
    const StarplusShape shape = decompose_starplus(pattern, r);
    return exponent_starplus(r, pattern.s(), shape.k,
                             static_cast<long long>(shape.surplus.size()))
        .exponent;
  }
  if (spec.name == "loose_cycle")
    return loose_cycle_exponent(r, pattern.s(), spec.ell).exponent;
  throw std::invalid_argument("no automatic exponent for strategy: " + spec.name);
}

}  // namespace semirand

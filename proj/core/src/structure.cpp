#include "semirand/structure.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <stdexcept>

#include "json.hpp"

namespace semirand {

namespace {

// Order- and orientation-free view: vertex count plus distinct-vertex
// supports, which is all degeneracy and cores care about.
struct SupportView {
  int k = 0;
  std::vector<std::vector<Vertex>> supports;
};

SupportView view_of(const Hypergraph& g) {
  SupportView v{g.n(), {}};
  v.supports.reserve(g.edges().size());
  for (const EdgeRecord& e : g.edges()) v.supports.push_back(e.support());
  return v;
}

SupportView view_of(const OrientedOrderedGraph& g) {
  g.validate();
  SupportView v{g.k, {}};
  for (const auto& a : g.edges) {
    if (a.from == a.to)
      v.supports.push_back({a.from});
    else
      v.supports.push_back({std::min(a.from, a.to), std::max(a.from, a.to)});
  }
  return v;
}

SupportView view_of(const LeadingEdgeHypergraph& g) {
  g.validate();
  SupportView v{g.k, {}};
  for (const auto& e : g.edges) {
    std::vector<Vertex> s = e.verts;
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    v.supports.push_back(std::move(s));
  }
  return v;
}

DegeneracyResult degeneracy_impl(const SupportView& g) {
  if (g.k < 1) throw std::invalid_argument("degeneracy needs a non-empty vertex set");
  std::vector<char> removed(g.k + 1, 0);
  std::vector<char> edge_alive(g.supports.size(), 1);
  std::vector<int> deg(g.k + 1, 0);
  for (const auto& sup : g.supports)
    for (Vertex v : sup) ++deg[v];

  std::vector<Vertex> removal;
  removal.reserve(g.k);
  int d = 0;
  for (int step = 0; step < g.k; ++step) {
    Vertex best = -1;
    for (Vertex v = 1; v <= g.k; ++v)
      if (!removed[v] && (best == -1 || deg[v] < deg[best])) best = v;
    d = std::max(d, deg[best]);
    removed[best] = 1;
    removal.push_back(best);
    for (size_t i = 0; i < g.supports.size(); ++i) {
      if (!edge_alive[i]) continue;
      const auto& sup = g.supports[i];
      if (std::find(sup.begin(), sup.end(), best) == sup.end()) continue;
      edge_alive[i] = 0;
      for (Vertex u : sup) --deg[u];
    }
  }
  DegeneracyResult res;
  res.d = d;
  res.ordering.assign(removal.rbegin(), removal.rend());
  return res;
}

Core d_core_impl(const SupportView& g, int d) {
  if (d < 0) throw std::invalid_argument("core order must be non-negative");
  std::vector<char> removed(g.k + 1, 0);
  std::vector<char> edge_alive(g.supports.size(), 1);
  std::vector<int> deg(g.k + 1, 0);
  for (const auto& sup : g.supports)
    for (Vertex v : sup) ++deg[v];

  bool changed = true;
  while (changed) {
    changed = false;
    for (Vertex v = 1; v <= g.k; ++v) {
      if (removed[v] || deg[v] >= d) continue;
      removed[v] = 1;
      changed = true;
      for (size_t i = 0; i < g.supports.size(); ++i) {
        if (!edge_alive[i]) continue;
        const auto& sup = g.supports[i];
        if (std::find(sup.begin(), sup.end(), v) == sup.end()) continue;
        edge_alive[i] = 0;
        for (Vertex u : sup) --deg[u];
      }
    }
  }
  Core core;
  for (Vertex v = 1; v <= g.k; ++v)
    if (!removed[v]) core.vertices.push_back(v);
  for (size_t i = 0; i < g.supports.size(); ++i)
    if (edge_alive[i]) core.edge_indices.push_back(static_cast<int>(i));
  return core;
}

// Forward reachability from `src` over the first `upto` arcs.
std::vector<char> reachable(int k, const std::vector<OrientedOrderedGraph::Arc>& arcs,
                            size_t upto, Vertex src) {
  std::vector<std::vector<Vertex>> adj(k + 1);
  for (size_t i = 0; i < upto; ++i) adj[arcs[i].from].push_back(arcs[i].to);
  std::vector<char> seen(k + 1, 0);
  std::queue<Vertex> q;
  seen[src] = 1;
  q.push(src);
  while (!q.empty()) {
    Vertex u = q.front();
    q.pop();
    for (Vertex w : adj[u])
      if (!seen[w]) {
        seen[w] = 1;
        q.push(w);
      }
  }
  return seen;
}

std::vector<int> weight_run(int k, const std::vector<OrientedOrderedGraph::Arc>& arcs,
                            const std::vector<size_t>& prefix_arc_counts,
                            const std::vector<Vertex>& leads) {
  std::vector<int> w(k + 1, 0);
  for (size_t i = 0; i < leads.size(); ++i) {
    const Vertex x = leads[i];
    w[x] += 1;
    std::vector<char> seen = reachable(k, arcs, prefix_arc_counts[i], x);
    for (Vertex v = 1; v <= k; ++v)
      if (seen[v] && w[v] < w[x]) w[v] = w[x];
  }
  return w;
}

int diameter_of_prefix(int k, const std::vector<OrientedOrderedGraph::Arc>& arcs, size_t upto) {
  std::vector<std::vector<Vertex>> adj(k + 1);
  for (size_t i = 0; i < upto; ++i)
    if (arcs[i].from != arcs[i].to) adj[arcs[i].from].push_back(arcs[i].to);
  int diam = 0;
  std::vector<int> dist(k + 1);
  for (Vertex s = 1; s <= k; ++s) {
    std::fill(dist.begin(), dist.end(), -1);
    dist[s] = 0;
    std::queue<Vertex> q;
    q.push(s);
    while (!q.empty()) {
      Vertex u = q.front();
      q.pop();
      for (Vertex w : adj[u])
        if (dist[w] < 0) {
          dist[w] = dist[u] + 1;
          diam = std::max(diam, dist[w]);
          q.push(w);
        }
    }
  }
  return diam;
}

std::vector<std::vector<Vertex>> simple_supports(const Hypergraph& g) {
  std::vector<std::vector<Vertex>> out;
  out.reserve(g.edges().size());
  for (const EdgeRecord& e : g.edges()) out.push_back(e.support());
  return out;
}

}  // namespace

DegeneracyResult degeneracy(const Hypergraph& g) { return degeneracy_impl(view_of(g)); }
DegeneracyResult degeneracy(const OrientedOrderedGraph& g) { return degeneracy_impl(view_of(g)); }
DegeneracyResult degeneracy(const LeadingEdgeHypergraph& g) { return degeneracy_impl(view_of(g)); }

Core d_core(const Hypergraph& g, int d) { return d_core_impl(view_of(g), d); }
Core d_core(const OrientedOrderedGraph& g, int d) { return d_core_impl(view_of(g), d); }
Core d_core(const LeadingEdgeHypergraph& g, int d) { return d_core_impl(view_of(g), d); }

std::vector<int> weight_function(const OrientedOrderedGraph& g) {
  g.validate();
  std::vector<size_t> prefix(g.edges.size());
  std::vector<Vertex> leads(g.edges.size());
  for (size_t i = 0; i < g.edges.size(); ++i) {
    prefix[i] = i + 1;  // arcs e_1..e_i including the new one
    leads[i] = g.edges[i].from;
  }
  return weight_run(g.k, g.edges, prefix, leads);
}

OrientedOrderedGraph aux_digraph(const LeadingEdgeHypergraph& g) {
  g.validate();
  OrientedOrderedGraph out;
  out.k = g.k;
  for (const auto& e : g.edges) {
    std::vector<Vertex> others = e.verts;
    std::sort(others.begin(), others.end());
    others.erase(std::unique(others.begin(), others.end()), others.end());
    for (Vertex u : others)
      if (u != e.lead) out.edges.push_back({e.lead, u});
  }
  return out;
}

std::vector<int> hyper_weight_function(const LeadingEdgeHypergraph& g) {
  g.validate();
  const OrientedOrderedGraph aux = aux_digraph(g);
  // Arc count after each hyperedge group.
  std::vector<size_t> prefix;
  std::vector<Vertex> leads;
  size_t arcs_so_far = 0;
  for (const auto& e : g.edges) {
    std::vector<Vertex> others = e.verts;
    std::sort(others.begin(), others.end());
    others.erase(std::unique(others.begin(), others.end()), others.end());
    size_t emitted = others.size();
    if (std::find(others.begin(), others.end(), e.lead) != others.end()) --emitted;
    arcs_so_far += emitted;
    prefix.push_back(arcs_so_far);
    leads.push_back(e.lead);
  }
  return weight_run(g.k, aux.edges, prefix, leads);
}

int ordered_diameter(const OrientedOrderedGraph& g) {
  g.validate();
  int best = 0;
  for (size_t i = 0; i <= g.edges.size(); ++i)
    best = std::max(best, diameter_of_prefix(g.k, g.edges, i));
  return best;
}

int ordered_diameter(const LeadingEdgeHypergraph& g) {
  g.validate();
  const OrientedOrderedGraph aux = aux_digraph(g);
  std::vector<size_t> prefix{0};
  size_t arcs_so_far = 0;
  for (const auto& e : g.edges) {
    std::vector<Vertex> others = e.verts;
    std::sort(others.begin(), others.end());
    others.erase(std::unique(others.begin(), others.end()), others.end());
    size_t emitted = others.size();
    if (std::find(others.begin(), others.end(), e.lead) != others.end()) --emitted;
    arcs_so_far += emitted;
    prefix.push_back(arcs_so_far);
  }
  int best = 0;
  for (size_t p : prefix) best = std::max(best, diameter_of_prefix(g.k, aux.edges, p));
  return best;
}

std::string to_json_string(const ThresholdReport& r) {
  nlohmann::ordered_json j;
  j["exponent"] = {{"num", r.exponent.num()}, {"den", r.exponent.den()}};
  j["source"] = r.source;
  j["params"] = nlohmann::ordered_json::object();
  for (const auto& [key, val] : r.params) j["params"][key] = val;
  j["flags"] = r.flags;
  return j.dump();
}

Rational mu(const Hypergraph& g, int r) {
  const int k = g.n();
  const int s = g.s();
  if (!(2 <= r && r <= s && s <= k)) throw std::invalid_argument("mu needs 2 <= r <= s <= |V|");
  if (k > 25) throw std::invalid_argument("mu enumeration capped at 25 vertices");
  const auto supports = simple_supports(g);
  std::vector<uint32_t> masks;
  masks.reserve(supports.size());
  for (const auto& sup : supports) {
    uint32_t m = 0;
    for (Vertex v : sup) m |= 1u << (v - 1);
    masks.push_back(m);
  }
  Rational best(0, 1);
  bool any = false;
  for (uint32_t W = 0; W < (1u << k); ++W) {
    const int size = __builtin_popcount(W);
    if (size < s) continue;
    long long edges = 0;
    for (uint32_t m : masks)
      if ((m & W) == m) ++edges;
    Rational ratio(edges, size - s + r);
    if (!any || best < ratio) {
      best = ratio;
      any = true;
    }
  }
  return best;
}

long long delta_d(const Hypergraph& g, int d) {
  if (!(1 <= d && d <= g.s())) throw std::invalid_argument("delta_d needs 1 <= d <= s");
  const int k = g.n();
  if (k > 25) throw std::invalid_argument("delta_d enumeration capped at 25 vertices");
  const auto supports = simple_supports(g);
  long long best = 0;
  std::vector<Vertex> cur;
  std::function<void(int)> rec = [&](int start) {
    if (static_cast<int>(cur.size()) == d) {
      long long cnt = 0;
      for (const auto& sup : supports) {
        bool all = true;
        for (Vertex v : cur)
          if (!std::binary_search(sup.begin(), sup.end(), v)) { all = false; break; }
        if (all) ++cnt;
      }
      best = std::max(best, cnt);
      return;
    }
    for (int v = start; v <= k; ++v) {
      cur.push_back(v);
      rec(v + 1);
      cur.pop_back();
    }
  };
  rec(1);
  return best;
}

bool is_balanced(const Hypergraph& g, int r) {
  const int k = g.n();
  const int s = g.s();
  if (!(2 <= r && r < s)) throw std::invalid_argument("balancedness needs 2 <= r < s");
  const Rational whole(g.edge_count(), k - s + r);
  return mu(g, r) <= whole;
}

Rational exponent_degeneracy(int d) {
  if (d < 1) throw std::invalid_argument("degeneracy exponent needs d >= 1");
  return Rational(d - 1, d);
}

Rational exponent_lower(int r, int s, int k, long long m) {
  if (!(2 <= r && r <= s && s <= k)) throw std::invalid_argument("need 2 <= r <= s <= k");
  if (m < 1) throw std::invalid_argument("need m >= 1");
  return Rational(r) - Rational(k - s + r, m);
}

Rational starplus_excess_bound(int r, int s, int k) {
  if (!(2 <= r && r < s)) throw std::invalid_argument("need 2 <= r < s");
  if (k <= s) throw std::invalid_argument("excess bound undefined for k <= s");
  const long long q = k - s + r;
  return Rational(r * binom(q, r) - q, k - s);
}

ThresholdReport exponent_starplus(int r, int s, int k, long long ell) {
  if (!(2 <= r && r < s)) throw std::invalid_argument("need 2 <= r < s");
  if (k < s || ell < 0) throw std::invalid_argument("need k >= s and ell >= 0");
  const long long q = k - s + r;
  ThresholdReport rep;
  rep.exponent = Rational(r) - Rational(q, binom(q, r) + ell);
  rep.source = "Thm1.9";
  rep.params = {{"r", r}, {"s", s}, {"k", k}, {"ell", ell}};
  if (k == s) {
    // Single-edge pattern; the excess bound has no value here and any
    // surplus breaks the starplus reading.
    rep.flags.push_back(ell == 0 ? "exact" : "upper_bound_not_guaranteed");
    if (ell == 0) rep.flags.push_back("single_edge");
    return rep;
  }
  const Rational bound = starplus_excess_bound(r, s, k);
  rep.flags.push_back(Rational(ell) <= bound ? "exact" : "upper_bound_not_guaranteed");
  return rep;
}

ThresholdReport generic_upper_bound(const Hypergraph& g, int r) {
  const int s = g.s();
  if (!(2 <= r && r < s)) throw std::invalid_argument("need 2 <= r < s");
  const long long ell = g.edge_count() - delta_d(g, s - r);
  if (g.n() == s && ell == 0) {
    ThresholdReport rep = exponent_starplus(r, s, s, 0);
    rep.source = "Cor1.10";
    return rep;
  }
  int k = std::max(g.n(), s + 1);
  while (Rational(ell) > starplus_excess_bound(r, s, k)) ++k;
  ThresholdReport rep = exponent_starplus(r, s, k, ell);
  rep.source = "Cor1.10";
  rep.flags = {"upper_bound"};
  return rep;
}

bool partial_starplus_condition(int r, int k, long long l1, long long l2) {
  if (l2 < 2) throw std::invalid_argument("condition needs l2 >= 2");
  if (k - 1 <= r) throw std::invalid_argument("condition needs k - 1 > r");
  return Rational(l1 + l2, l2 - 1) <= Rational(k - 1, k - 1 - r);
}

ThresholdReport loose_cycle_exponent(int r, int s, int ell) {
  if (ell < 2) throw std::invalid_argument("loose cycle needs ell >= 2");
  if (2 * ell > s) throw std::invalid_argument("loose cycle needs ell <= s/2");
  if (r > s - ell) throw std::invalid_argument("loose cycle exponent needs r <= s - ell");
  ThresholdReport rep;
  rep.source = "Prop5.2";
  rep.params = {{"r", r}, {"s", s}, {"ell", ell}};
  if (r <= s - 2 * ell) {
    rep.exponent = Rational(0);
    rep.flags = {"exact"};
  } else if (r == s - 2 * ell + 2) {
    rep.exponent = Rational(2, 3);
    rep.flags = {"exact"};
  } else {
    rep.exponent = Rational(r - s + 2 * ell, 3);
    rep.flags = {"lower_bound"};
  }
  return rep;
}

Rational k6_design_exponent() { return Rational(9, 5); }

StarplusShape decompose_starplus(const Hypergraph& g, int r) {
  const int s = g.s();
  if (!(1 <= r && r < s)) throw std::invalid_argument("need 1 <= r < s");
  const int c = s - r;
  const int k = g.n();
  if (k > 25) throw std::invalid_argument("decomposition capped at 25 vertices");
  const auto supports = simple_supports(g);

  // Center: the c-set contained in the most edges, lexicographically first.
  StarplusShape shape;
  shape.k = k;
  long long best = -1;
  std::vector<Vertex> cur;
  std::function<void(int)> rec = [&](int start) {
    if (static_cast<int>(cur.size()) == c) {
      long long cnt = 0;
      for (const auto& sup : supports) {
        bool all = true;
        for (Vertex v : cur)
          if (!std::binary_search(sup.begin(), sup.end(), v)) { all = false; break; }
        if (all) ++cnt;
      }
      if (cnt > best) {
        best = cnt;
        shape.center = cur;
      }
      return;
    }
    for (int v = start; v <= k; ++v) {
      cur.push_back(v);
      rec(v + 1);
      cur.pop_back();
    }
  };
  rec(1);

  for (const auto& sup : supports) {
    bool has_center = true;
    for (Vertex v : shape.center)
      if (!std::binary_search(sup.begin(), sup.end(), v)) { has_center = false; break; }
    if (!has_center) shape.surplus.push_back(sup);
  }
  shape.star_is_full = best == binom(k - c, r);
  return shape;
}

}  // namespace semirand

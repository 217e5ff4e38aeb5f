#include "semirand/patterns.hpp"

#include <functional>
#include <stdexcept>

namespace semirand {

namespace {

// All s-subsets of the given vertex list, lexicographic.
void for_each_subset(const std::vector<Vertex>& verts, int s,
                     const std::function<void(const std::vector<Vertex>&)>& fn) {
  std::vector<Vertex> cur;
  std::function<void(size_t)> rec = [&](size_t start) {
    if (static_cast<int>(cur.size()) == s) {
      fn(cur);
      return;
    }
    for (size_t i = start; i < verts.size(); ++i) {
      if (verts.size() - i < s - cur.size()) break;
      cur.push_back(verts[i]);
      rec(i + 1);
      cur.pop_back();
    }
  };
  rec(0);
}

void append_edge(Hypergraph& g, const std::vector<Vertex>& edge) {
  g.add_edge(edge, {}, g.edge_count() + 1);
}

}  // namespace

Hypergraph make_clique(int k, int s) {
  if (k < s) throw std::invalid_argument("clique needs k >= s");
  Hypergraph g(k, s);
  std::vector<Vertex> verts(k);
  for (int i = 0; i < k; ++i) verts[i] = i + 1;
  for_each_subset(verts, s, [&](const std::vector<Vertex>& e) { append_edge(g, e); });
  return g;
}

Hypergraph make_full_star(int k, int s, int c) {
  if (!(1 <= c && c <= s && s <= k)) throw std::invalid_argument("star needs 1 <= c <= s <= k");
  Hypergraph g(k, s);
  std::vector<Vertex> wings;
  for (int v = 1; v <= k - c; ++v) wings.push_back(v);
  std::vector<Vertex> center;
  for (int v = k - c + 1; v <= k; ++v) center.push_back(v);
  for_each_subset(wings, s - c, [&](const std::vector<Vertex>& part) {
    std::vector<Vertex> e = part;
    e.insert(e.end(), center.begin(), center.end());
    append_edge(g, e);
  });
  return g;
}

Hypergraph make_starplus(int k, int s, int r,
                         const std::vector<std::vector<Vertex>>& surplus) {
  if (!(1 <= r && r < s)) throw std::invalid_argument("starplus needs 1 <= r < s");
  Hypergraph g = make_full_star(k, s, s - r);
  const int center_lo = k - (s - r) + 1;
  for (const auto& e : surplus) {
    if (static_cast<int>(e.size()) != s) throw std::invalid_argument("surplus edge of wrong size");
    int in_center = 0;
    for (Vertex v : e)
      if (v >= center_lo) ++in_center;
    if (in_center >= s - r)
      throw std::invalid_argument("surplus edge contains the whole center");
    append_edge(g, e);
  }
  return g;
}

Hypergraph make_tight_cycle(int q, int s) {
  if (q <= s) throw std::invalid_argument("tight cycle needs q > s");
  Hypergraph g(q, s);
  for (int i = 0; i < q; ++i) {
    std::vector<Vertex> e(s);
    for (int j = 0; j < s; ++j) e[j] = (i + j) % q + 1;
    append_edge(g, e);
  }
  return g;
}

Hypergraph make_loose_cycle(int m, int s, int ell) {
  if (!(m >= 3 && ell >= 1 && 2 * ell <= s))
    throw std::invalid_argument("loose cycle needs m >= 3 and ell <= s/2");
  const int k = (s - ell) * m;
  Hypergraph g(k, s);
  for (int i = 0; i < m; ++i) {
    std::vector<Vertex> e(s);
    for (int j = 0; j < s; ++j) e[j] = (i * (s - ell) + j) % k + 1;
    append_edge(g, e);
  }
  return g;
}

Hypergraph make_path_graph(int k) {
  Hypergraph g(k, 2);
  for (int v = 1; v + 1 <= k; ++v) append_edge(g, {v, v + 1});
  return g;
}

Hypergraph disjoint_union(const Hypergraph& a, const Hypergraph& b) {
  if (a.s() != b.s()) throw std::invalid_argument("uniformity mismatch");
  Hypergraph g(a.n() + b.n(), a.s());
  for (const EdgeRecord& e : a.edges()) append_edge(g, e.all());
  for (const EdgeRecord& e : b.edges()) {
    std::vector<Vertex> shifted = e.all();
    for (Vertex& v : shifted) v += a.n();
    append_edge(g, shifted);
  }
  return g;
}

}  // namespace semirand

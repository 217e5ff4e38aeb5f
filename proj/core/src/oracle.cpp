#include "semirand/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <set>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "semirand/structure.hpp"

namespace semirand {

namespace {

struct VecHash {
  size_t operator()(const std::vector<Vertex>& v) const {
    uint64_t h = 1469598103934665603ULL;
    for (Vertex x : v) {
      h ^= static_cast<uint64_t>(x) + 0x9E3779B97F4A7C15ULL;
      h *= 1099511628211ULL;
    }
    return static_cast<size_t>(h);
  }
};

using VecSet = std::unordered_set<std::vector<Vertex>, VecHash>;
template <typename T>
using VecMap = std::unordered_map<std::vector<Vertex>, T, VecHash>;

std::vector<Vertex> erase_one(std::vector<Vertex> ms, Vertex v) {
  auto it = std::find(ms.begin(), ms.end(), v);
  ms.erase(it);
  return ms;
}

// ---------------------------------------------------------------------------
// contains_copy
// ---------------------------------------------------------------------------

struct HostIndex {
  VecSet edge_multisets;                       // distinct full multisets
  VecMap<std::vector<Vertex>> completions;     // multiset minus one vertex -> completing vertices
  std::vector<std::vector<Vertex>> distinct;   // distinct multisets, insertion order
  std::vector<int> degree;                     // distinct-edge degree per vertex
  std::vector<std::vector<int>> incident;      // vertex -> distinct edge ids
};

HostIndex build_host_index(const Hypergraph& host) {
  HostIndex idx;
  idx.degree.assign(host.n() + 1, 0);
  idx.incident.assign(host.n() + 1, {});
  for (const EdgeRecord& rec : host.edges()) {
    std::vector<Vertex> ms = rec.all();
    if (!idx.edge_multisets.insert(ms).second) continue;
    const int id = static_cast<int>(idx.distinct.size());
    idx.distinct.push_back(ms);
    std::vector<Vertex> sup = ms;
    sup.erase(std::unique(sup.begin(), sup.end()), sup.end());
    for (Vertex v : sup) {
      ++idx.degree[v];
      idx.incident[v].push_back(id);
      idx.completions[erase_one(ms, v)].push_back(v);
    }
  }
  return idx;
}

}  // namespace

bool contains_copy(const Hypergraph& host, const Hypergraph& pattern) {
  if (host.s() != pattern.s()) throw std::invalid_argument("uniformity mismatch");
  const int k = pattern.n();
  const int n = host.n();
  if (n < k) return false;

  // Distinct pattern edge multisets; parallel pattern edges need only one
  // host edge since parallel host edges count once.
  VecSet seen;
  std::vector<std::vector<Vertex>> pedges;
  for (const EdgeRecord& e : pattern.edges())
    if (seen.insert(e.all()).second) pedges.push_back(e.all());
  if (pedges.empty()) return true;

  HostIndex idx = build_host_index(host);
  if (idx.distinct.size() < pedges.size()) return false;

  std::vector<int> pdeg(k + 1, 0);
  std::vector<std::vector<int>> pinc(k + 1);
  for (size_t i = 0; i < pedges.size(); ++i) {
    std::vector<Vertex> sup = pedges[i];
    sup.erase(std::unique(sup.begin(), sup.end()), sup.end());
    for (Vertex v : sup) {
      ++pdeg[v];
      pinc[v].push_back(static_cast<int>(i));
    }
  }

  // Map non-isolated pattern vertices in an order that closes edges as early
  // as possible; isolated vertices only need spare host vertices.
  std::vector<Vertex> order;
  {
    std::vector<char> placed(k + 1, 0);
    int remaining = 0;
    for (Vertex v = 1; v <= k; ++v)
      if (pdeg[v] > 0) ++remaining;
    while (remaining > 0) {
      Vertex best = 0;
      long long best_score = -1;
      for (Vertex v = 1; v <= k; ++v) {
        if (placed[v] || pdeg[v] == 0) continue;
        long long closing = 0, touching = 0;
        for (int ei : pinc[v]) {
          bool all = true, any = false;
          for (Vertex u : pedges[ei]) {
            if (u == v) continue;
            if (placed[u]) any = true; else all = false;
          }
          if (all) ++closing;
          if (any) ++touching;
        }
        const long long score = closing * 1000000 + touching * 1000 + pdeg[v];
        if (score > best_score) { best_score = score; best = v; }
      }
      placed[best] = 1;
      order.push_back(best);
      --remaining;
    }
  }

  std::vector<Vertex> image(k + 1, 0);
  std::vector<char> used(n + 1, 0);

  std::function<bool(size_t)> search = [&](size_t depth) -> bool {
    if (depth == order.size()) return true;
    const Vertex v = order[depth];

    // Edges fully determined once v is placed.
    std::vector<int> closing;
    for (int ei : pinc[v]) {
      bool all = true;
      for (Vertex u : pedges[ei])
        if (u != v && image[u] == 0) { all = false; break; }
      if (all) closing.push_back(ei);
    }

    auto feasible = [&](Vertex c) -> bool {
      if (used[c] || idx.degree[c] < pdeg[v]) return false;
      for (int ei : closing) {
        std::vector<Vertex> img;
        img.reserve(pedges[ei].size());
        for (Vertex u : pedges[ei]) img.push_back(u == v ? c : image[u]);
        std::sort(img.begin(), img.end());
        if (!idx.edge_multisets.count(img)) return false;
      }
      return true;
    };

    auto try_candidates = [&](const std::vector<Vertex>& cands) -> bool {
      for (Vertex c : cands) {
        if (!feasible(c)) continue;
        image[v] = c;
        used[c] = 1;
        if (search(depth + 1)) return true;
        image[v] = 0;
        used[c] = 0;
      }
      return false;
    };

    // Tightest available candidate source first: completions of a closing
    // edge in which v sits once, else co-members of a mapped neighbour,
    // else everything.
    for (int ei : closing) {
      if (std::count(pedges[ei].begin(), pedges[ei].end(), v) != 1) continue;
      std::vector<Vertex> key;
      key.reserve(pedges[ei].size() - 1);
      for (Vertex u : pedges[ei])
        if (u != v) key.push_back(image[u]);
      std::sort(key.begin(), key.end());
      auto it = idx.completions.find(key);
      if (it == idx.completions.end()) return false;
      return try_candidates(it->second);
    }

    for (int ei : pinc[v]) {
      Vertex mapped = 0;
      for (Vertex u : pedges[ei])
        if (u != v && image[u] != 0) { mapped = u; break; }
      if (mapped == 0) continue;
      std::vector<Vertex> cands;
      std::vector<char> in(n + 1, 0);
      for (int hid : idx.incident[image[mapped]])
        for (Vertex c : idx.distinct[hid])
          if (!in[c]) { in[c] = 1; cands.push_back(c); }
      return try_candidates(cands);
    }

    std::vector<Vertex> all(n);
    for (int i = 0; i < n; ++i) all[i] = i + 1;
    return try_candidates(all);
  };

  return search(0);
}

// ---------------------------------------------------------------------------
// ordered_hom_set
// ---------------------------------------------------------------------------

namespace {

// Shared edge-by-edge backtracking over host records. `match` must, given an
// edge index, a host record and the current binding, enumerate every way of
// extending the binding (calling `found` once per extension and undoing its
// own changes).
struct HomSearch {
  const Hypergraph& host;
  int pattern_k;
  int pattern_m;
  Vertex anchor;
  bool respect_order;
  std::vector<Vertex> image;   // pattern vertex -> host vertex, 0 unset
  std::vector<char> used;      // host side
  std::vector<char> used_rec;  // record ids, only consulted when order is off
  Vertex forbidden = 0;
  std::set<Vertex> result;

  std::function<void(int, const EdgeRecord&, const std::function<void()>&)> match_edge;

  explicit HomSearch(const Hypergraph& h) : host(h) {}

  bool bind(Vertex pv, Vertex hv) {
    if (hv == forbidden) return false;
    if (image[pv] != 0) return image[pv] == hv;
    if (used[hv]) return false;
    image[pv] = hv;
    used[hv] = 1;
    return true;
  }
  void unbind(Vertex pv) {
    used[image[pv]] = 0;
    image[pv] = 0;
  }

  void run(int edge_idx, int from_rec) {
    if (edge_idx == pattern_m) {
      finish();
      return;
    }
    const auto& records = host.edges();
    const int m_host = static_cast<int>(records.size());
    for (int ri = respect_order ? from_rec : 0; ri < m_host; ++ri) {
      if (respect_order && m_host - ri < pattern_m - edge_idx) break;
      if (!respect_order && used_rec[ri]) continue;
      if (image[anchor] != 0 && result.count(image[anchor])) return;  // subtree adds nothing new
      used_rec[ri] = 1;
      match_edge(edge_idx, records[ri], [&] { run(edge_idx + 1, ri + 1); });
      used_rec[ri] = 0;
    }
  }

  void finish() {
    // Isolated pattern vertices just need spare host vertices. All images
    // are distinct host vertices (a preset anchor is kept off-limits to the
    // edge search via `forbidden`), so `mapped` counts consumed vertices.
    int mapped = 0;
    for (int v = 1; v <= pattern_k; ++v)
      if (image[v] != 0) ++mapped;
    const int spare_needed = pattern_k - mapped;
    if (host.n() - mapped < spare_needed) return;
    if (image[anchor] != 0) result.insert(image[anchor]);
  }
};

std::vector<Vertex> run_anchored(HomSearch& hs) {
  hs.image.assign(hs.pattern_k + 1, 0);
  hs.used.assign(hs.host.n() + 1, 0);
  hs.used_rec.assign(hs.host.edges().size(), 0);
  if (hs.pattern_k > hs.host.n()) return {};
  hs.run(0, 0);
  return {hs.result.begin(), hs.result.end()};
}

// Anchor not covered by any edge: u is an image iff the edges embed while
// avoiding u and there is still room for the remaining isolated vertices.
std::vector<Vertex> run_isolated_anchor(HomSearch& hs) {
  std::vector<Vertex> out;
  if (hs.pattern_k > hs.host.n()) return out;
  for (Vertex u = 1; u <= hs.host.n(); ++u) {
    hs.image.assign(hs.pattern_k + 1, 0);
    hs.used.assign(hs.host.n() + 1, 0);
    hs.used_rec.assign(hs.host.edges().size(), 0);
    hs.result.clear();
    hs.forbidden = u;
    hs.image[hs.anchor] = u;  // occupies one isolated slot, not a host vertex
    hs.run(0, 0);
    if (!hs.result.empty()) out.push_back(u);
  }
  return out;
}

}  // namespace

std::vector<Vertex> ordered_hom_set(const OrientedOrderedGraph& pattern, Vertex anchor,
                                    const Hypergraph& host, HomOptions opts) {
  pattern.validate();
  if (anchor < 1 || anchor > pattern.k) throw std::invalid_argument("anchor not in pattern");
  if (host.s() != 2) throw std::invalid_argument("graph homomorphisms need a 2-uniform host");

  HomSearch hs(host);
  hs.pattern_k = pattern.k;
  hs.pattern_m = static_cast<int>(pattern.edges.size());
  hs.anchor = anchor;
  hs.respect_order = opts.respect_order;

  hs.match_edge = [&](int ei, const EdgeRecord& rec, const std::function<void()>& found) {
    const auto arc = pattern.edges[ei];
    if (rec.square.size() != 1 || rec.circle.size() != 1) return;  // not an oriented record
    const Vertex a = rec.square[0], b = rec.circle[0];
    auto attempt = [&](Vertex ha, Vertex hb) {
      const bool una = hs.image[arc.from] == 0;
      if (!hs.bind(arc.from, ha)) return;
      const bool unb = arc.to == arc.from ? false : hs.image[arc.to] == 0;
      if (arc.to == arc.from ? hs.image[arc.to] == hb : hs.bind(arc.to, hb)) {
        found();
        if (unb) hs.unbind(arc.to);
      }
      if (una) hs.unbind(arc.from);
    };
    if (opts.respect_orientation) {
      attempt(a, b);
    } else {
      attempt(a, b);
      if (a != b) attempt(b, a);
    }
  };

  bool anchor_isolated = true;
  for (const auto& arc : pattern.edges)
    if (arc.from == anchor || arc.to == anchor) { anchor_isolated = false; break; }
  return anchor_isolated ? run_isolated_anchor(hs) : run_anchored(hs);
}

std::vector<Vertex> ordered_hom_set(const LeadingEdgeHypergraph& pattern, Vertex anchor,
                                    const Hypergraph& host, HomOptions opts) {
  pattern.validate();
  if (anchor < 1 || anchor > pattern.k) throw std::invalid_argument("anchor not in pattern");
  if (host.s() != pattern.s) throw std::invalid_argument("uniformity mismatch");

  HomSearch hs(host);
  hs.pattern_k = pattern.k;
  hs.pattern_m = static_cast<int>(pattern.edges.size());
  hs.anchor = anchor;
  hs.respect_order = opts.respect_order;

  // Unifies the pattern edge slots with the host multiset: mapped slots are
  // consumed first, then distinct unmapped pattern vertices are assigned to
  // distinct host values with matching multiplicities.
  std::function<void(std::vector<std::pair<Vertex, int>>&, std::vector<std::pair<Vertex, int>>&,
                     size_t, const std::function<void()>&)>
      assign = [&](std::vector<std::pair<Vertex, int>>& pgroups,
                   std::vector<std::pair<Vertex, int>>& hgroups, size_t gi,
                   const std::function<void()>& found) {
        if (gi == pgroups.size()) {
          found();
          return;
        }
        const auto [pv, mult] = pgroups[gi];
        for (auto& [hv, hmult] : hgroups) {
          if (hmult != mult) continue;
          if (!hs.bind(pv, hv)) continue;
          const int saved = hmult;
          hmult = -1;  // consumed
          assign(pgroups, hgroups, gi + 1, found);
          hmult = saved;
          hs.unbind(pv);
        }
      };

  hs.match_edge = [&](int ei, const EdgeRecord& rec, const std::function<void()>& found) {
    const auto& pe = pattern.edges[ei];
    std::vector<Vertex> hostms = rec.all();
    if (hostms.size() != pe.verts.size()) return;

    if (opts.respect_orientation) {
      if (rec.square.size() != 1) return;  // leading-vertex hosts carry one square
      const Vertex sq = rec.square[0];
      if (hs.image[pe.lead] != 0 && hs.image[pe.lead] != sq) return;
      if (std::count(pe.verts.begin(), pe.verts.end(), pe.lead) !=
          static_cast<long>(std::count(hostms.begin(), hostms.end(), sq)))
        return;
    }

    // Group pattern slots and host values by multiplicity.
    std::vector<std::pair<Vertex, int>> pgroups, hgroups;
    for (size_t i = 0; i < pe.verts.size(); ++i)
      if (i == 0 || pe.verts[i] != pe.verts[i - 1])
        pgroups.push_back({pe.verts[i], 1});
      else
        ++pgroups.back().second;
    for (size_t i = 0; i < hostms.size(); ++i)
      if (i == 0 || hostms[i] != hostms[i - 1])
        hgroups.push_back({hostms[i], 1});
      else
        ++hgroups.back().second;

    // Consume groups whose pattern vertex is already mapped.
    std::vector<std::pair<Vertex, int>> free_p;
    for (const auto& [pv, mult] : pgroups) {
      if (hs.image[pv] == 0) {
        free_p.push_back({pv, mult});
        continue;
      }
      bool ok = false;
      for (auto& [hv, hmult] : hgroups)
        if (hv == hs.image[pv] && hmult == mult) {
          hmult = -1;
          ok = true;
          break;
        }
      if (!ok) return;  // leaves hgroups partially consumed; rebuilt per record
    }

    auto bound_lead = [&]() -> bool {
      return !opts.respect_orientation || hs.image[pe.lead] == rec.square[0];
    };
    assign(free_p, hgroups, 0, [&] {
      if (bound_lead()) found();
    });
  };

  bool anchor_isolated = true;
  for (const auto& e : pattern.edges)
    if (std::find(e.verts.begin(), e.verts.end(), anchor) != e.verts.end()) {
      anchor_isolated = false;
      break;
    }
  return anchor_isolated ? run_isolated_anchor(hs) : run_anchored(hs);
}

// ---------------------------------------------------------------------------
// X_j counting
// ---------------------------------------------------------------------------

namespace {

__uint128_t choose128(long long n, long long k) {
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  __uint128_t r = 1;
  for (long long i = 1; i <= k; ++i) r = r * static_cast<unsigned long long>(n - k + i) / i;
  return r;
}

}  // namespace

unsigned long long count_k_sets_with_j_edges(const Hypergraph& host, int k, int j,
                                             unsigned long long cap) {
  if (k < 1 || k > host.n()) throw std::invalid_argument("need 1 <= k <= n");
  if (j < 1) throw std::invalid_argument("need j >= 1");

  // Multiplicity per distinct support, and the union of all supports. An
  // edge with repeated vertices is never a sub-multiset of a vertex set, so
  // only simple-support records can be spanned.
  VecMap<long long> mult;
  std::vector<char> in_union(host.n() + 1, 0);
  std::set<int> support_sizes;
  for (const EdgeRecord& rec : host.edges()) {
    std::vector<Vertex> sup = rec.support();
    if (static_cast<int>(sup.size()) != host.s()) continue;
    if (static_cast<int>(sup.size()) > k) continue;
    ++mult[sup];
    support_sizes.insert(static_cast<int>(sup.size()));
    for (Vertex v : sup) in_union[v] = 1;
  }
  if (mult.empty()) return 0;

  std::vector<Vertex> universe;
  for (Vertex v = 1; v <= host.n(); ++v)
    if (in_union[v]) universe.push_back(v);
  const long long outside = host.n() - static_cast<long long>(universe.size());

  // Feasibility guard in the spirit of the C(t*s, k) candidate bound.
  {
    __uint128_t est = 0;
    for (const auto& [sup, m] : mult) {
      (void)m;
      __uint128_t per = 0;
      for (int c = 0; c <= k - static_cast<int>(sup.size()); ++c)
        per += choose128(static_cast<long long>(universe.size()), c);
      est += per;
      if (est > cap) throw std::runtime_error("k-set enumeration exceeds the configured cap");
    }
  }

  // A candidate A is any subset of the support union (|A| <= k) containing at
  // least one support; every k-set W decomposes as W = A + (k - |A|) vertices
  // untouched by edges, contributing choose(outside, k - |A|).
  auto edges_inside = [&](const std::vector<Vertex>& A) -> long long {
    long long total = 0;
    std::vector<Vertex> cur;
    for (int size : support_sizes) {
      cur.clear();
      std::function<void(size_t)> rec = [&](size_t start) {
        if (static_cast<int>(cur.size()) == size) {
          auto it = mult.find(cur);
          if (it != mult.end()) total += it->second;
          return;
        }
        for (size_t i = start; i < A.size(); ++i) {
          if (A.size() - i < size - cur.size()) break;
          cur.push_back(A[i]);
          rec(i + 1);
          cur.pop_back();
        }
      };
      rec(0);
    }
    return total;
  };

  VecSet visited;
  __uint128_t total = 0;
  std::vector<Vertex> rest;
  for (const auto& [sup, m] : mult) {
    (void)m;
    rest.clear();
    std::set_difference(universe.begin(), universe.end(), sup.begin(), sup.end(),
                        std::back_inserter(rest));
    const int room = k - static_cast<int>(sup.size());
    // Enumerate extensions T of every size 0..room.
    std::vector<Vertex> T;
    std::function<void(size_t)> rec = [&](size_t start) {
      std::vector<Vertex> A;
      A.reserve(sup.size() + T.size());
      std::merge(sup.begin(), sup.end(), T.begin(), T.end(), std::back_inserter(A));
      if (visited.insert(A).second) {
        if (edges_inside(A) >= j)
          total += choose128(outside, k - static_cast<long long>(A.size()));
      }
      if (static_cast<int>(T.size()) == room) return;
      for (size_t i = start; i < rest.size(); ++i) {
        T.push_back(rest[i]);
        rec(i + 1);
        T.pop_back();
      }
    };
    rec(0);
  }

  if (total > static_cast<__uint128_t>(~0ULL))
    throw std::overflow_error("k-set count exceeds 64 bits");
  return static_cast<unsigned long long>(total);
}

// ---------------------------------------------------------------------------
// Closed-form bounds
// ---------------------------------------------------------------------------

double lemma21_expectation(long long n, long long t, int x) {
  if (x < 0) throw std::invalid_argument("need x >= 0");
  double fact = 1.0;
  for (int i = 2; i <= x; ++i) fact *= i;
  return std::pow(static_cast<double>(t), x) /
         (fact * std::pow(static_cast<double>(n), x - 1));
}

namespace {

double weight_bound(long long t, long long n, int w, int D, double extra) {
  if (2 * t >= n) throw std::invalid_argument("bound requires t < n/2");
  double fact = 1.0;
  for (int i = 2; i <= w; ++i) fact *= i;
  return std::pow(static_cast<double>(t), w) / std::pow(static_cast<double>(n), w - 1) *
         extra * (2.0 * std::pow(fact, D) - 1.0);
}

}  // namespace

double lemma23_bound(const OrientedOrderedGraph& g, Vertex v, long long t, long long n) {
  if (v < 1 || v > g.k) throw std::invalid_argument("vertex not in pattern");
  const std::vector<int> w = weight_function(g);
  return weight_bound(t, n, w[v], ordered_diameter(g), 1.0);
}

double lemma23_bound(const LeadingEdgeHypergraph& g, Vertex v, long long t, long long n) {
  if (v < 1 || v > g.k) throw std::invalid_argument("vertex not in pattern");
  const std::vector<int> w = hyper_weight_function(g);
  return weight_bound(t, n, w[v], ordered_diameter(g), static_cast<double>(g.k));
}

double lower_bound_rhs(int r, int s, int k, long long m, long long n, long long t, int j) {
  if (j < 1 || j > m) throw std::invalid_argument("need 1 <= j <= m");
  return std::pow(static_cast<double>(t), j) *
         std::pow(static_cast<double>(k), static_cast<double>(r) * (j - 1)) *
         std::pow(static_cast<double>(n), static_cast<double>(k - s + r) - static_cast<double>(r) * j);
}

}  // namespace semirand

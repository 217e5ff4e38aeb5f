#pragma once

#include <vector>

#include "semirand/hypergraph.hpp"

namespace semirand {

// Constructors for the fixed target patterns the strategies and tests use.
// All of them produce plain s-graphs (full edge stored as the square part,
// times 1..m).

// Complete s-graph on k vertices.
Hypergraph make_clique(int k, int s);

// Full c-star on k vertices: all s-sets containing the center, which is
// fixed as the top c vertex ids {k-c+1, ..., k}.
Hypergraph make_full_star(int k, int s, int c);

// Full (s-r)-star on k vertices plus the given surplus edges. Surplus edges
// must be s-sets that do not contain the whole center.
Hypergraph make_starplus(int k, int s, int r,
                         const std::vector<std::vector<Vertex>>& surplus);

// Tight cycle C_q^(s): q cyclically ordered vertices, edges are the q
// consecutive s-segments. Requires q > s.
Hypergraph make_tight_cycle(int q, int s);

// ell-loose cycle C_m^(s,ell): m edges on (s-ell)*m vertices, consecutive
// edges overlapping in exactly ell vertices. Requires ell <= s/2, m >= 3.
Hypergraph make_loose_cycle(int m, int s, int ell);

// Path graph 1-2-...-k as a 2-graph.
Hypergraph make_path_graph(int k);

// Vertex-disjoint union placed side by side (ids of b shifted by a.n()).
Hypergraph disjoint_union(const Hypergraph& a, const Hypergraph& b);

}  // namespace semirand

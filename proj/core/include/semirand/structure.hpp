#pragma once

#include <map>
#include <string>
#include <vector>

#include "semirand/hypergraph.hpp"
#include "semirand/rational.hpp"

namespace semirand {

// ---------------------------------------------------------------------------
// Degeneracy / cores
// ---------------------------------------------------------------------------

struct DegeneracyResult {
  int d = 0;
  // v_1..v_k: every v_l has degree <= d in the sub-hypergraph induced by
  // {v_1..v_l}. Ties broken towards the lowest vertex id, so the ordering is
  // deterministic.
  std::vector<Vertex> ordering;
};

DegeneracyResult degeneracy(const Hypergraph& g);
DegeneracyResult degeneracy(const OrientedOrderedGraph& g);
DegeneracyResult degeneracy(const LeadingEdgeHypergraph& g);

// The d-core: vertices of the maximal induced sub-hypergraph with minimum
// degree >= d, plus the indices of the edges that survive inside it.
struct Core {
  std::vector<Vertex> vertices;
  std::vector<int> edge_indices;
};

Core d_core(const Hypergraph& g, int d);
Core d_core(const OrientedOrderedGraph& g, int d);
Core d_core(const LeadingEdgeHypergraph& g, int d);

// ---------------------------------------------------------------------------
// Weight recursion
// ---------------------------------------------------------------------------

// Per-vertex weights after processing the edges in order: inserting edge
// x->y bumps the weight of x by one and then raises every vertex reachable
// from x (in the prefix including the new edge) to at least the new weight.
// Index 0 of the result is unused.
std::vector<int> weight_function(const OrientedOrderedGraph& g);

// Auxiliary digraph of a leading-edge hypergraph: each hyperedge with lead x
// emits arcs x->u for every distinct u in the edge other than x, preserving
// hyperedge order.
OrientedOrderedGraph aux_digraph(const LeadingEdgeHypergraph& g);

// Same recursion as weight_function, with reachability taken in the
// auxiliary digraph of each hyperedge prefix.
std::vector<int> hyper_weight_function(const LeadingEdgeHypergraph& g);

// max over prefixes G_i of the directed diameter of G_i (longest shortest
// directed distance over reachable ordered pairs); 0 for the empty graph.
int ordered_diameter(const OrientedOrderedGraph& g);
// Hypergraph variant: diameters of the auxiliary digraphs of hyperedge
// prefixes.
int ordered_diameter(const LeadingEdgeHypergraph& g);

// ---------------------------------------------------------------------------
// Density parameters and threshold exponents
// ---------------------------------------------------------------------------

struct ThresholdReport {
  Rational exponent;
  std::string source;  // "Thm1.9", "Cor1.10", ...
  std::map<std::string, long long> params;
  std::vector<std::string> flags;  // "exact", "lower_bound", ...
};

std::string to_json_string(const ThresholdReport& r);

// max over induced vertex subsets W, |W| >= s, of e(G[W]) / (|W| - s + r).
Rational mu(const Hypergraph& g, int r);

// max over d-subsets D of the number of edges containing D.
long long delta_d(const Hypergraph& g, int d);

// Whole graph maximizes e/(v - s + r) over all induced subsets with >= s
// vertices.
bool is_balanced(const Hypergraph& g, int r);

// (d-1)/d.
Rational exponent_degeneracy(int d);

// r - (k-s+r)/m.
Rational exponent_lower(int r, int s, int k, long long m);

// (r*C(k-s+r, r) - (k-s+r)) / (k-s). Rejects k <= s.
Rational starplus_excess_bound(int r, int s, int k);

// r - (k-s+r)/(C(k-s+r, r) + ell); exact threshold when ell is within the
// excess bound, flagged otherwise.
ThresholdReport exponent_starplus(int r, int s, int k, long long ell);

// ell := e(G) - Delta_{s-r}(G); smallest k >= |V(G)| passing the excess
// bound, then the starplus exponent at that k.
ThresholdReport generic_upper_bound(const Hypergraph& g, int r);

// (l1 + l2)/(l2 - 1) <= (k-1)/(k-1-r), exact rational comparison.
bool partial_starplus_condition(int r, int k, long long l1, long long l2);

// Loose-cycle thresholds: 0 when r <= s-2*ell, the lower bound
// (r-s+2*ell)/3 when r >= s-2*ell+1, exact 2/3 when r = s-2*ell+2.
ThresholdReport loose_cycle_exponent(int r, int s, int ell);

// Design exponent of the two-apex K6 builder.
Rational k6_design_exponent();

// Starplus decomposition of an arbitrary s-graph: a center achieving
// Delta_{s-r}, full-star check, surplus edges.
struct StarplusShape {
  int k = 0;
  std::vector<Vertex> center;                  // size s - r
  std::vector<std::vector<Vertex>> surplus;    // edges not containing center
  bool star_is_full = false;
};
StarplusShape decompose_starplus(const Hypergraph& g, int r);

}  // namespace semirand

#pragma once

#include <vector>

#include "semirand/hypergraph.hpp"

namespace semirand {

// Brute-force ground truth used to cross-check everything else.

// True iff an injective vertex map sends every pattern edge multiset onto a
// host edge multiset. Parallel host edges count once; a host edge with
// repeated vertices can only serve as the image of a pattern edge with the
// same repeat profile.
bool contains_copy(const Hypergraph& host, const Hypergraph& pattern);

struct HomOptions {
  bool respect_order = true;
  bool respect_orientation = true;
};

// S(v, G; t): all host vertices that are the anchor image of some injective
// homomorphism respecting the square->circle orientation and mapping the
// pattern edges to host edges in strictly increasing time order.
std::vector<Vertex> ordered_hom_set(const OrientedOrderedGraph& pattern, Vertex anchor,
                                    const Hypergraph& host, HomOptions opts = {});

// Leading-vertex variant: the image of each edge's lead must carry the
// square of the host record (r = 1 hosts).
std::vector<Vertex> ordered_hom_set(const LeadingEdgeHypergraph& pattern, Vertex anchor,
                                    const Hypergraph& host, HomOptions opts = {});

// Exact number of k-subsets of [n] spanning at least j edges, multiplicity
// per edge record. A set spans an edge when the edge fits inside it with
// multiplicities, so records with repeated vertices never count. Candidates
// are assembled from edge supports and padded with C(n - |support union|,
// k - |A|) choices of untouched vertices, so the cost is bounded by the
// support structure rather than C(n, k). Throws when the candidate bound
// exceeds `cap` or the count overflows 64 bits.
unsigned long long count_k_sets_with_j_edges(const Hypergraph& host, int k, int j,
                                             unsigned long long cap = 200000000ULL);

// t^x / (x! * n^(x-1)).
double lemma21_expectation(long long n, long long t, int x);

// (t^w / n^(w-1)) * (2 (w!)^D - 1) with w the vertex weight and D the
// ordered diameter. Requires t < n/2.
double lemma23_bound(const OrientedOrderedGraph& g, Vertex v, long long t, long long n);
// Hypergraph variant carries the extra factor k.
double lemma23_bound(const LeadingEdgeHypergraph& g, Vertex v, long long t, long long n);

// t^j * k^(r(j-1)) * n^(k-s+r-rj).
double lower_bound_rhs(int r, int s, int k, long long m, long long n, long long t, int j);

}  // namespace semirand

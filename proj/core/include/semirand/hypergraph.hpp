#pragma once

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace semirand {

using Vertex = int;

// One edge of the evolving hypergraph: the random part (squares), the
// player part (circles) and the round it was created in. Both parts are
// kept sorted; the full edge is their multiset union.
struct EdgeRecord {
  std::vector<Vertex> square;
  std::vector<Vertex> circle;
  long long time = 0;

  std::vector<Vertex> all() const {
    std::vector<Vertex> out;
    out.reserve(square.size() + circle.size());
    std::merge(square.begin(), square.end(), circle.begin(), circle.end(),
               std::back_inserter(out));
    return out;
  }

  // Distinct vertices of the edge.
  std::vector<Vertex> support() const {
    std::vector<Vertex> out = all();
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }
};

// s-uniform multiset-edge hypergraph on vertices 1..n with insertion-ordered
// edges. Equality (and thus edge multiplicity) is about the undirected
// multiset structure only; the square/circle split and the timestamps are
// carried along for the homomorphism diagnostics.
class Hypergraph {
 public:
  Hypergraph(int n, int s) : n_(n), s_(s) {
    if (n < 0 || s < 1) throw std::invalid_argument("hypergraph needs n >= 0, s >= 1");
  }

  int n() const { return n_; }
  int s() const { return s_; }
  long long edge_count() const { return static_cast<long long>(edges_.size()); }
  const std::vector<EdgeRecord>& edges() const { return edges_; }

  void add_edge(std::vector<Vertex> square, std::vector<Vertex> circle, long long time) {
    if (static_cast<int>(square.size() + circle.size()) != s_)
      throw std::invalid_argument("edge has wrong number of vertex slots");
    for (Vertex v : square) check_vertex(v);
    for (Vertex v : circle) check_vertex(v);
    if (!edges_.empty() && time <= edges_.back().time)
      throw std::invalid_argument("edge time must strictly increase");
    std::sort(square.begin(), square.end());
    std::sort(circle.begin(), circle.end());
    EdgeRecord rec{std::move(square), std::move(circle), time};
    for (Vertex v : rec.support()) ++degree_[v];
    edges_.push_back(std::move(rec));
  }

  // Number of edges whose support contains v; an edge holding v with
  // multiplicity >= 1 contributes exactly one (loop convention).
  int degree(Vertex v) const {
    check_vertex(v);
    return degree_[v];
  }

  // Sub-hypergraph of all edges with support inside W; vertex ids kept.
  Hypergraph induced(const std::vector<Vertex>& W) const {
    std::vector<char> in(n_ + 1, 0);
    for (Vertex v : W) {
      check_vertex(v);
      in[v] = 1;
    }
    Hypergraph sub(n_, s_);
    for (const EdgeRecord& e : edges_) {
      bool inside = true;
      for (Vertex v : e.support())
        if (!in[v]) { inside = false; break; }
      if (inside) sub.add_edge(e.square, e.circle, e.time);
    }
    return sub;
  }

  // Canonical equality: same n, s and the same time-ordered sequence of
  // edge multisets (split and timestamps ignored).
  friend bool operator==(const Hypergraph& a, const Hypergraph& b) {
    if (a.n_ != b.n_ || a.s_ != b.s_ || a.edges_.size() != b.edges_.size()) return false;
    for (size_t i = 0; i < a.edges_.size(); ++i)
      if (a.edges_[i].all() != b.edges_[i].all()) return false;
    return true;
  }
  friend bool operator!=(const Hypergraph& a, const Hypergraph& b) { return !(a == b); }

 private:
  void check_vertex(Vertex v) const {
    if (v < 1 || v > n_) throw std::out_of_range("vertex id out of range");
  }

  int n_;
  int s_;
  std::vector<EdgeRecord> edges_;
  std::vector<int> degree_ = std::vector<int>(n_ + 1, 0);
};

// Pattern graph with a fixed edge order e_1..e_m and a fixed orientation
// per edge; loops and parallel edges permitted.
struct OrientedOrderedGraph {
  struct Arc {
    Vertex from = 0;
    Vertex to = 0;
  };

  int k = 0;
  std::vector<Arc> edges;

  void validate() const {
    if (k < 0) throw std::invalid_argument("negative vertex count");
    for (const Arc& a : edges)
      if (a.from < 1 || a.from > k || a.to < 1 || a.to > k)
        throw std::out_of_range("arc endpoint out of range");
  }
};

// Pattern hypergraph with a fixed edge order and a leading vertex per edge.
struct LeadingEdgeHypergraph {
  struct Edge {
    std::vector<Vertex> verts;  // multiset, kept sorted
    Vertex lead = 0;
  };

  int k = 0;
  int s = 0;
  std::vector<Edge> edges;

  void validate() const {
    if (k < 0 || s < 1) throw std::invalid_argument("bad leading-edge pattern shape");
    for (const Edge& e : edges) {
      if (static_cast<int>(e.verts.size()) != s)
        throw std::invalid_argument("edge size does not match uniformity");
      for (Vertex v : e.verts)
        if (v < 1 || v > k) throw std::out_of_range("vertex id out of range");
      if (std::find(e.verts.begin(), e.verts.end(), e.lead) == e.verts.end())
        throw std::invalid_argument("leading vertex not a member of its edge");
    }
  }
};

}  // namespace semirand

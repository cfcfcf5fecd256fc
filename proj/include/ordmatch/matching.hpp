#pragma once

#include <compare>
#include <initializer_list>
#include <vector>

#include "ordmatch/instance.hpp"

namespace ordmatch {

/// Unordered node pair, stored with u < v.
struct Edge {
  Node u = 0;
  Node v = 0;

  Edge() = default;
  Edge(Node a, Node b) : u(a < b ? a : b), v(a < b ? b : a) {}

  bool touches(Node x) const { return u == x || v == x; }
  Node other(Node x) const { return x == u ? v : u; }

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Vertex-disjoint edges over agents [0, n). Edges keep insertion order;
/// equality compares them as sets.
class Matching {
 public:
  explicit Matching(int n) : n_(n), mate_(n, -1) {}
  Matching(int n, std::initializer_list<Edge> edges);
  Matching(int n, const std::vector<Edge>& edges);

  int ambient_size() const { return n_; }
  const std::vector<Edge>& edges() const { return edges_; }
  std::size_t size() const { return edges_.size(); }
  bool empty() const { return edges_.empty(); }

  /// Throws ParameterError if an endpoint is out of range or already matched.
  void add(Edge e);

  bool is_matched(Node x) const { return mate_[x] >= 0; }
  /// Partner of x, or -1.
  Node mate(Node x) const { return mate_[x]; }
  std::vector<Node> matched_nodes() const;
  std::vector<Node> unmatched_nodes() const;

  /// Edges in ascending order.
  std::vector<Edge> sorted_edges() const;

  friend bool operator==(const Matching& a, const Matching& b) {
    return a.n_ == b.n_ && a.sorted_edges() == b.sorted_edges();
  }

 private:
  int n_;
  std::vector<Edge> edges_;
  std::vector<Node> mate_;
};

/// Sum of edge weights. Evaluation only; ordinal algorithms never call it.
double matching_weight(const Matching& m, const WeightedInstance& inst);

}  // namespace ordmatch

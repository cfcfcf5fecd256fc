#pragma once

#include <optional>
#include <span>
#include <vector>

#include "ordmatch/instance.hpp"
#include "ordmatch/matching.hpp"

namespace ordmatch {

/// The set of edges still available to a matching algorithm. Backed by an
/// n x n adjacency table; removing a node deactivates every edge at it.
class EdgePool {
 public:
  /// Complete graph on all n agents.
  static EdgePool complete(int n);
  /// Complete graph on the given node subset.
  static EdgePool complete(int n, std::span<const Node> nodes);
  /// Complete bipartite graph between two disjoint node sets.
  static EdgePool bipartite(int n, std::span<const Node> left, std::span<const Node> right);
  static EdgePool from_edges(int n, std::span<const Edge> edges);

  int ambient_size() const { return n_; }
  std::size_t edge_count() const { return count_; }
  bool empty() const { return count_ == 0; }
  bool contains(Node x, Node y) const { return adj_[index(x, y)] != 0; }
  /// True iff some active edge touches x.
  bool is_active(Node x) const { return degree_[x] > 0; }

  /// Deactivates every edge at x.
  void remove_incident(Node x);
  void remove_endpoints(Edge e) {
    remove_incident(e.u);
    remove_incident(e.v);
  }

  /// Lowest-indexed node with an active edge, if any.
  std::optional<Node> lowest_active_node() const;

  /// x's most preferred partner among its active edges.
  std::optional<Node> top_choice(Node x, const PreferenceProfile& prefs) const;

  /// r-th active edge in ascending (u, v) order; r < edge_count().
  Edge nth_edge(std::size_t r) const;
  std::vector<Edge> edges() const;

 private:
  explicit EdgePool(int n);
  void activate(Node x, Node y);
  std::size_t index(Node x, Node y) const { return static_cast<std::size_t>(x) * n_ + y; }

  int n_;
  std::size_t count_ = 0;
  std::vector<unsigned char> adj_;
  std::vector<int> degree_;
};

}  // namespace ordmatch

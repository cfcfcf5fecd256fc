#include "ordmatch/edge_pool.hpp"

#include <sstream>

#include "ordmatch/error.hpp"

namespace ordmatch {

EdgePool::EdgePool(int n) : n_(n), adj_(static_cast<std::size_t>(n) * n, 0), degree_(n, 0) {
  if (n < 0) throw ParameterError("negative pool size");
}

void EdgePool::activate(Node x, Node y) {
  if (x < 0 || y < 0 || x >= n_ || y >= n_ || x == y) {
    std::ostringstream msg;
    msg << "pool edge (" << x << "," << y << ") invalid over " << n_ << " agents";
    throw ParameterError(msg.str());
  }
  if (adj_[index(x, y)]) return;
  adj_[index(x, y)] = adj_[index(y, x)] = 1;
  ++degree_[x];
  ++degree_[y];
  ++count_;
}

EdgePool EdgePool::complete(int n) {
  EdgePool pool(n);
  for (Node x = 0; x < n; ++x)
    for (Node y = x + 1; y < n; ++y) pool.activate(x, y);
  return pool;
}

EdgePool EdgePool::complete(int n, std::span<const Node> nodes) {
  EdgePool pool(n);
  for (std::size_t i = 0; i < nodes.size(); ++i)
    for (std::size_t j = i + 1; j < nodes.size(); ++j) pool.activate(nodes[i], nodes[j]);
  return pool;
}

EdgePool EdgePool::bipartite(int n, std::span<const Node> left, std::span<const Node> right) {
  EdgePool pool(n);
  std::vector<char> side(n, 0);
  for (Node a : left) {
    if (a < 0 || a >= n) throw ParameterError("bipartite side node out of range");
    side[a] = 1;
  }
  for (Node b : right)
    if (b >= 0 && b < n && side[b]) throw ParameterError("bipartite sides overlap");
  for (Node a : left)
    for (Node b : right) pool.activate(a, b);
  return pool;
}

EdgePool EdgePool::from_edges(int n, std::span<const Edge> edges) {
  EdgePool pool(n);
  for (const Edge& e : edges) pool.activate(e.u, e.v);
  return pool;
}

void EdgePool::remove_incident(Node x) {
  if (degree_[x] == 0) return;
  for (Node y = 0; y < n_; ++y) {
    if (adj_[index(x, y)]) {
      adj_[index(x, y)] = adj_[index(y, x)] = 0;
      --degree_[y];
      --count_;
    }
  }
  degree_[x] = 0;
}

std::optional<Node> EdgePool::lowest_active_node() const {
  for (Node x = 0; x < n_; ++x)
    if (degree_[x] > 0) return x;
  return std::nullopt;
}

std::optional<Node> EdgePool::top_choice(Node x, const PreferenceProfile& prefs) const {
  if (degree_[x] == 0) return std::nullopt;
  for (Node y : prefs.ranking(x))
    if (adj_[index(x, y)]) return y;
  return std::nullopt;
}

Edge EdgePool::nth_edge(std::size_t r) const {
  for (Node x = 0; x < n_; ++x) {
    const std::size_t row = index(x, 0);
    for (Node y = x + 1; y < n_; ++y) {
      if (adj_[row + y]) {
        if (r == 0) return {x, y};
        --r;
      }
    }
  }
  throw ParameterError("edge rank beyond pool size");
}

std::vector<Edge> EdgePool::edges() const {
  std::vector<Edge> out;
  out.reserve(count_);
  for (Node x = 0; x < n_; ++x)
    for (Node y = x + 1; y < n_; ++y)
      if (adj_[index(x, y)]) out.emplace_back(x, y);
  return out;
}

}  // namespace ordmatch

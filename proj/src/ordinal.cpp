#include "ordmatch/ordinal.hpp"

#include <algorithm>
#include <numeric>

#include "ordmatch/error.hpp"

namespace ordmatch {

Edge find_undominated(const EdgePool& pool, const PreferenceProfile& prefs) {
  if (pool.ambient_size() != prefs.size()) throw ParameterError("pool and profile disagree on n");
  const auto start = pool.lowest_active_node();
  if (!start) throw EmptyPool("no active edges");

  std::vector<char> visited(pool.ambient_size(), 0);
  Node x = *start;
  visited[x] = 1;
  for (;;) {
    // Every node on the walk is active: it was reached along an active edge.
    const Node y = *pool.top_choice(x, prefs);
    if (visited[y]) return {x, y};
    visited[y] = 1;
    x = y;
  }
}

Matching greedy_k_matching(EdgePool pool, const PreferenceProfile& prefs, int k) {
  if (k < 1) throw ParameterError("greedy k-matching needs k >= 1");
  Matching m(pool.ambient_size());
  while (!pool.empty() && static_cast<int>(m.size()) < k) {
    const Edge e = find_undominated(pool, prefs);
    m.add(e);
    pool.remove_endpoints(e);
  }
  return m;
}

Matching greedy_k_matching(const PreferenceProfile& prefs, int k) {
  return greedy_k_matching(EdgePool::complete(prefs.size()), prefs, k);
}

Matching random_k_matching(EdgePool pool, int k, RandomSource& rng) {
  Matching m(pool.ambient_size());
  while (!pool.empty() && static_cast<int>(m.size()) < k) {
    const Edge e = pool.nth_edge(rng.uniform_index(pool.edge_count()));
    m.add(e);
    pool.remove_endpoints(e);
  }
  return m;
}

HybridTrace hybrid_matching_traced(const PreferenceProfile& prefs, RandomSource& rng) {
  const int n = prefs.size();
  if (n < 2) throw ParameterError("hybrid matching needs n >= 2");

  const int g = (n + 2) / 3;
  Matching prefix = greedy_k_matching(prefs, g);
  const std::vector<Node> bottom = prefix.unmatched_nodes();
  const int half_bottom = static_cast<int>(bottom.size()) / 2;

  if (rng.coin()) {
    Matching result = prefix;
    const Matching rest = random_k_matching(EdgePool::complete(n, bottom), half_bottom, rng);
    for (const Edge& e : rest.edges()) result.add(e);
    return {std::move(result), std::move(prefix), true};
  }

  // Release half_bottom greedy edges chosen uniformly without replacement
  // (partial Fisher-Yates over the prefix in selection order).
  const auto& greedy_edges = prefix.edges();
  std::vector<std::size_t> order(greedy_edges.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  for (int i = 0; i < half_bottom; ++i) {
    const std::size_t j = i + rng.uniform_index(order.size() - i);
    std::swap(order[i], order[j]);
  }
  std::vector<char> released(greedy_edges.size(), 0);
  std::vector<Node> freed;
  for (int i = 0; i < half_bottom; ++i) {
    released[order[i]] = 1;
    freed.push_back(greedy_edges[order[i]].u);
    freed.push_back(greedy_edges[order[i]].v);
  }

  Matching result(n);
  for (std::size_t i = 0; i < greedy_edges.size(); ++i)
    if (!released[i]) result.add(greedy_edges[i]);
  // When |B| is odd the cross matching leaves exactly one B node unmatched.
  const Matching cross =
      random_k_matching(EdgePool::bipartite(n, freed, bottom), static_cast<int>(freed.size()), rng);
  for (const Edge& e : cross.edges()) result.add(e);
  return {std::move(result), std::move(prefix), false};
}

Matching hybrid_matching(const PreferenceProfile& prefs, RandomSource& rng) {
  return hybrid_matching_traced(prefs, rng).result;
}

double greedy_ratio_bound(double alpha, double alpha_star) {
  if (!(alpha > 0.0 && alpha <= 1.0) || !(alpha_star > 0.0 && alpha_star <= 1.0))
    throw ParameterError("greedy ratio bound parameters must lie in (0, 1]");
  if (alpha + alpha_star < 1.0) return std::max(2.0, 2.0 * alpha_star / alpha);
  return std::max(2.0, (alpha_star + 1.0) / alpha - 1.0);
}

namespace {

struct ExpectationVisitor {
  const WeightedInstance& inst;

  double operator()(const CompleteMode& mode) const {
    std::vector<Node> nodes = mode.nodes;
    if (nodes.empty()) {
      nodes.resize(inst.size());
      std::iota(nodes.begin(), nodes.end(), 0);
    }
    const double m = static_cast<double>(nodes.size());
    if (nodes.size() < 2) return 0.0;
    double sum = 0.0;
    for (std::size_t i = 0; i < nodes.size(); ++i)
      for (std::size_t j = i + 1; j < nodes.size(); ++j) sum += inst.weight(nodes[i], nodes[j]);
    const double pairs = m * (m - 1.0) / 2.0;
    return sum * static_cast<double>(nodes.size() / 2) / pairs;
  }

  double operator()(const BipartiteMode& mode) const {
    if (mode.left.size() != mode.right.size()) throw ParameterError("bipartite sides differ in size");
    if (mode.left.empty()) return 0.0;
    double sum = 0.0;
    for (Node a : mode.left)
      for (Node b : mode.right) sum += inst.weight(a, b);
    return sum / static_cast<double>(mode.left.size());
  }
};

}  // namespace

double expected_random_weight(const WeightedInstance& inst, const RandomMode& mode) {
  return std::visit(ExpectationVisitor{inst}, mode);
}

}  // namespace ordmatch

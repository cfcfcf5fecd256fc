#include "ordmatch/reductions.hpp"

#include <algorithm>
#include <sstream>

#include "ordmatch/error.hpp"

namespace ordmatch {

void check_clustering(const Clustering& c) {
  if (c.parts.empty()) throw ParameterError("clustering has no parts");
  std::vector<char> seen(c.n, 0);
  std::size_t covered = 0;
  for (const auto& part : c.parts) {
    if (part.size() != c.parts.front().size()) throw ParameterError("clustering parts differ in size");
    for (Node x : part) {
      if (x < 0 || x >= c.n || seen[x]) throw ParameterError("clustering parts overlap or leave range");
      seen[x] = 1;
      ++covered;
    }
  }
  if (covered != static_cast<std::size_t>(c.n)) throw ParameterError("clustering does not cover every node");
}

void check_tour(const Tour& t) {
  if (static_cast<int>(t.order.size()) != t.n) throw ParameterError("tour must visit every node once");
  std::vector<char> seen(t.n, 0);
  for (Node x : t.order) {
    if (x < 0 || x >= t.n || seen[x]) throw ParameterError("tour repeats or leaves range");
    seen[x] = 1;
  }
}

namespace {

double inside_weight(std::span<const Node> nodes, const WeightedInstance& inst) {
  double sum = 0.0;
  for (std::size_t i = 0; i < nodes.size(); ++i)
    for (std::size_t j = i + 1; j < nodes.size(); ++j) sum += inst.weight(nodes[i], nodes[j]);
  return sum;
}

}  // namespace

double clustering_weight(const Clustering& c, const WeightedInstance& inst) {
  double sum = 0.0;
  for (const auto& part : c.parts) sum += inside_weight(part, inst);
  return sum;
}

double subset_weight(const Subset& s, const WeightedInstance& inst) { return inside_weight(s.nodes, inst); }

double path_weight(const Path& p, const WeightedInstance& inst) {
  double sum = 0.0;
  for (std::size_t i = 1; i < p.order.size(); ++i) sum += inst.weight(p.order[i - 1], p.order[i]);
  return sum;
}

double tour_weight(const Tour& t, const WeightedInstance& inst) {
  if (t.order.size() < 2) return 0.0;
  double sum = inst.weight(t.order.back(), t.order.front());
  for (std::size_t i = 1; i < t.order.size(); ++i) sum += inst.weight(t.order[i - 1], t.order[i]);
  return sum;
}

Clustering matching_to_clusters(const Matching& m, int k) {
  const int n = m.ambient_size();
  if (k < 1 || n % k != 0) {
    std::ostringstream msg;
    msg << "cluster count " << k << " must divide n = " << n;
    throw ParameterError(msg.str());
  }
  const int c = n / k;
  const bool odd = (c % 2) != 0;
  const std::size_t expected_edges = odd ? static_cast<std::size_t>(n - k) / 2 : static_cast<std::size_t>(n) / 2;
  if (m.size() != expected_edges) {
    std::ostringstream msg;
    msg << "clustering into " << k << " parts of " << c << " needs a matching with " << expected_edges
        << " edges, got " << m.size();
    throw ParameterError(msg.str());
  }

  const auto edges = m.sorted_edges();
  const std::size_t per_part = static_cast<std::size_t>(c / 2);
  Clustering out{n, std::vector<std::vector<Node>>(k)};
  for (std::size_t i = 0; i < edges.size(); ++i) {
    auto& part = out.parts[i / per_part];
    part.push_back(edges[i].u);
    part.push_back(edges[i].v);
  }
  if (odd) {
    const auto loose = m.unmatched_nodes();
    for (std::size_t i = 0; i < loose.size(); ++i) out.parts[i % k].push_back(loose[i]);
  }
  for (auto& part : out.parts) std::sort(part.begin(), part.end());
  return out;
}

Subset matching_to_subset(const Matching& m, int k) {
  if (k < 1 || k > m.ambient_size()) throw ParameterError("subset size out of range");
  if (m.size() != static_cast<std::size_t>(k / 2)) {
    std::ostringstream msg;
    msg << "subset of " << k << " nodes needs a matching with " << k / 2 << " edges, got " << m.size();
    throw ParameterError(msg.str());
  }
  Subset out{m.ambient_size(), m.matched_nodes()};
  if (k % 2 != 0) {
    out.nodes.push_back(m.unmatched_nodes().front());
    std::sort(out.nodes.begin(), out.nodes.end());
  }
  return out;
}

Path path_completion_from(const Matching& m, const PreferenceProfile& prefs, Node start) {
  if (m.empty()) throw ParameterError("path completion needs a nonempty matching");
  if (prefs.size() != m.ambient_size()) throw ParameterError("matching and profile disagree on n");
  if (start < 0 || start >= m.ambient_size() || !m.is_matched(start))
    throw ParameterError("path start must be a matched node");

  Path path{m.ambient_size(), {start, m.mate(start)}};
  path.order.reserve(2 * m.size());
  Node free_end = m.mate(start);
  const Edge first(start, free_end);
  for (const Edge& e : m.sorted_edges()) {
    if (e == first) continue;
    const bool take_u = prefs.prefers(free_end, e.u, e.v);
    const Node near = take_u ? e.u : e.v;
    const Node far = take_u ? e.v : e.u;
    path.order.push_back(near);
    path.order.push_back(far);
    free_end = far;
  }
  return path;
}

Path path_completion(const Matching& m, const PreferenceProfile& prefs, RandomSource& rng) {
  if (m.empty()) throw ParameterError("path completion needs a nonempty matching");
  const auto nodes = m.matched_nodes();
  return path_completion_from(m, prefs, nodes[rng.uniform_index(nodes.size())]);
}

Tour matching_to_tour_from(const Matching& m, const PreferenceProfile& prefs, Node start) {
  const int n = m.ambient_size();
  if (n < 3) throw ParameterError("a tour needs at least 3 nodes");
  if (m.size() != static_cast<std::size_t>(n / 2)) throw ParameterError("tour construction needs a perfect matching");
  Path path = path_completion_from(m, prefs, start);
  for (Node x : m.unmatched_nodes()) path.order.push_back(x);
  return {n, std::move(path.order)};
}

Tour matching_to_tour(const Matching& m, const PreferenceProfile& prefs, RandomSource& rng) {
  const int n = m.ambient_size();
  if (n < 3) throw ParameterError("a tour needs at least 3 nodes");
  if (m.size() != static_cast<std::size_t>(n / 2)) throw ParameterError("tour construction needs a perfect matching");
  const auto nodes = m.matched_nodes();
  return matching_to_tour_from(m, prefs, nodes[rng.uniform_index(nodes.size())]);
}

}  // namespace ordmatch

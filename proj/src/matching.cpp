#include "ordmatch/matching.hpp"

#include <algorithm>
#include <sstream>

#include "ordmatch/error.hpp"

namespace ordmatch {

Matching::Matching(int n, std::initializer_list<Edge> edges) : Matching(n) {
  for (const Edge& e : edges) add(e);
}

Matching::Matching(int n, const std::vector<Edge>& edges) : Matching(n) {
  for (const Edge& e : edges) add(e);
}

void Matching::add(Edge e) {
  if (e.u < 0 || e.v >= n_ || e.u == e.v) {
    std::ostringstream msg;
    msg << "edge (" << e.u << "," << e.v << ") is not a valid pair over " << n_ << " agents";
    throw ParameterError(msg.str());
  }
  if (mate_[e.u] >= 0 || mate_[e.v] >= 0) {
    std::ostringstream msg;
    msg << "edge (" << e.u << "," << e.v << ") shares an endpoint with the matching";
    throw ParameterError(msg.str());
  }
  mate_[e.u] = e.v;
  mate_[e.v] = e.u;
  edges_.push_back(e);
}

std::vector<Node> Matching::matched_nodes() const {
  std::vector<Node> out;
  for (Node x = 0; x < n_; ++x)
    if (mate_[x] >= 0) out.push_back(x);
  return out;
}

std::vector<Node> Matching::unmatched_nodes() const {
  std::vector<Node> out;
  for (Node x = 0; x < n_; ++x)
    if (mate_[x] < 0) out.push_back(x);
  return out;
}

std::vector<Edge> Matching::sorted_edges() const {
  auto out = edges_;
  std::sort(out.begin(), out.end());
  return out;
}

double matching_weight(const Matching& m, const WeightedInstance& inst) {
  if (m.ambient_size() > inst.size()) throw ParameterError("matching endpoints exceed the instance");
  double sum = 0.0;
  for (const Edge& e : m.edges()) sum += inst.weight(e.u, e.v);
  return sum;
}

}  // namespace ordmatch

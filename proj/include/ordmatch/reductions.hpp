#pragma once

#include <vector>

#include "ordmatch/instance.hpp"
#include "ordmatch/matching.hpp"
#include "ordmatch/random.hpp"

// Black-box conversions from matchings to solutions of Max k-Sum, Densest
// k-Subgraph and Max TSP.

namespace ordmatch {

/// k disjoint equal-size parts covering [0, n).
struct Clustering {
  int n = 0;
  std::vector<std::vector<Node>> parts;

  friend bool operator==(const Clustering&, const Clustering&) = default;
};

struct Subset {
  int n = 0;
  std::vector<Node> nodes;

  friend bool operator==(const Subset&, const Subset&) = default;
};

/// Node order; a Tour is read cyclically, a Path is not.
struct Path {
  int n = 0;
  std::vector<Node> order;

  friend bool operator==(const Path&, const Path&) = default;
};

struct Tour {
  int n = 0;
  std::vector<Node> order;

  friend bool operator==(const Tour&, const Tour&) = default;
};

/// Throws ParameterError unless `c` partitions [0, n) into equal parts.
void check_clustering(const Clustering& c);
void check_tour(const Tour& t);

/// Sum over parts of the weight inside each part.
double clustering_weight(const Clustering& c, const WeightedInstance& inst);
/// Weight of all edges inside the subset.
double subset_weight(const Subset& s, const WeightedInstance& inst);
double path_weight(const Path& p, const WeightedInstance& inst);
/// Includes the closing edge.
double tour_weight(const Tour& t, const WeightedInstance& inst);

/// Groups matched edges into k clusters so both endpoints of every edge share
/// a cluster. Edges are sorted by smaller endpoint and chunked in order.
///
/// With c = n/k even, m must be perfect and each cluster gets c/2 edges.
/// With c odd, m must have (n-k)/2 edges; each cluster gets (c-1)/2 edges
/// plus one unmatched node, dealt out in ascending order.
/// Throws ParameterError if k does not divide n or m has the wrong size.
Clustering matching_to_clusters(const Matching& m, int k);

/// Endpoints of m. For even k, m must have k/2 edges. For odd k, m must have
/// (k-1)/2 edges and the lowest-indexed unmatched node is added.
Subset matching_to_subset(const Matching& m, int k);

/// Hamiltonian path over m's endpoints that contains every edge of m.
/// The first edge is the matched edge of `start`, the path begins at `start`,
/// and the remaining edges follow in ascending smaller-endpoint order. Each
/// connector joins the path's free end to the endpoint of the next edge it
/// ranks higher. Throws ParameterError for an empty matching or an unmatched
/// start.
Path path_completion_from(const Matching& m, const PreferenceProfile& prefs, Node start);

/// path_completion_from with the start drawn uniformly from m's endpoints.
Path path_completion(const Matching& m, const PreferenceProfile& prefs, RandomSource& rng);

/// Closes a completed path into a tour. m must leave at most one node
/// unmatched (none for even n); that node is appended to the path before
/// closing. Throws ParameterError for n < 3 or a non-perfect matching.
Tour matching_to_tour(const Matching& m, const PreferenceProfile& prefs, RandomSource& rng);
Tour matching_to_tour_from(const Matching& m, const PreferenceProfile& prefs, Node start);

}  // namespace ordmatch

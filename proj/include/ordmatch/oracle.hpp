#pragma once

#include <chrono>

#include "ordmatch/instance.hpp"
#include "ordmatch/matching.hpp"
#include "ordmatch/reductions.hpp"

// Exact exponential-time solvers used as ground truth at desk scale.

namespace ordmatch {

/// Per-problem size limits and a wall-clock ceiling per call. Requests past
/// a limit throw BudgetExceeded; nothing is ever approximated.
struct OracleBudget {
  int max_n_matching = 20;
  int max_n_k_sum = 10;
  int max_n_densest = 20;
  int max_n_tsp = 15;
  std::chrono::milliseconds time_limit{std::chrono::minutes(2)};
};

struct MatchingOptimum {
  Matching matching;
  double weight;
};

struct ClusteringOptimum {
  Clustering clustering;
  double weight;
};

struct SubsetOptimum {
  Subset subset;
  double weight;
};

struct TourOptimum {
  Tour tour;
  double weight;
};

/// Maximum-weight matching with at most k edges (subset DP over node masks).
/// Among equal-weight optima the lexicographically smallest sorted edge list
/// of size min(k, floor(n/2)) is returned.
MatchingOptimum opt_matching(const WeightedInstance& inst, int k, const OracleBudget& budget = {});

/// Best partition into k equal parts. Enumerates canonical partitions where
/// the lowest unassigned node anchors each new part.
ClusteringOptimum opt_k_sum(const WeightedInstance& inst, int k, const OracleBudget& budget = {});

/// Best k-node subset by enumerating all C(n, k) subsets.
SubsetOptimum opt_densest(const WeightedInstance& inst, int k, const OracleBudget& budget = {});

/// Maximum-weight Hamiltonian cycle via DP over (visited set, endpoint).
/// The returned tour starts at node 0. Needs n >= 3.
TourOptimum opt_tsp(const WeightedInstance& inst, const OracleBudget& budget = {});

}  // namespace ordmatch

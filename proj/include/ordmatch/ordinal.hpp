#pragma once

#include <variant>
#include <vector>

#include "ordmatch/edge_pool.hpp"
#include "ordmatch/instance.hpp"
#include "ordmatch/matching.hpp"
#include "ordmatch/random.hpp"

// Ordinal matching algorithms. Nothing in this header that builds a matching
// takes a WeightedInstance: the algorithms can only read rankings, pools and
// random streams.

namespace ordmatch {

/// Returns an active edge that no other active edge at either endpoint beats,
/// for any weights consistent with `prefs`. Starts at the lowest-indexed
/// active node and follows top choices until a node repeats; the edge that
/// closes the cycle is returned. Throws EmptyPool on an empty pool.
Edge find_undominated(const EdgePool& pool, const PreferenceProfile& prefs);

/// Greedy k-matching on the complete graph: repeatedly takes an undominated
/// edge and drops its endpoints. Returns min(k, floor(n/2)) edges.
/// Throws ParameterError for k < 1.
Matching greedy_k_matching(const PreferenceProfile& prefs, int k);

/// Same loop over an arbitrary starting pool. Stops when the pool empties.
Matching greedy_k_matching(EdgePool pool, const PreferenceProfile& prefs, int k);

/// Draws uniformly random active edges until k are taken or the pool runs
/// dry. k larger than achievable yields a maximal matching.
Matching random_k_matching(EdgePool pool, int k, RandomSource& rng);

struct HybridTrace {
  Matching result;
  /// The greedy prefix with ceil(n/3) edges.
  Matching greedy_prefix;
  /// True when the greedy-plus-random-completion branch was returned; false
  /// for the release-half-and-rematch-across branch.
  bool completion_branch;
};

/// Interleaved greedy/random matching. Takes ceil(n/3) greedy edges, then
/// with probability 1/2 either completes them with a random matching on the
/// unmatched set B, or keeps all but floor(|B|/2) randomly chosen greedy
/// edges and randomly matches the released nodes to B. Returns floor(n/2)
/// edges. Throws ParameterError for n < 2.
HybridTrace hybrid_matching_traced(const PreferenceProfile& prefs, RandomSource& rng);
Matching hybrid_matching(const PreferenceProfile& prefs, RandomSource& rng);

/// Analytic worst-case OPT(k*) / Greedy(k) for k = alpha*n/2 and
/// k* = alpha_star*n/2. Both parameters must lie in (0, 1].
double greedy_ratio_bound(double alpha, double alpha_star);

struct CompleteMode {
  /// Empty means every agent.
  std::vector<Node> nodes;
};
struct BipartiteMode {
  std::vector<Node> left;
  std::vector<Node> right;
};
using RandomMode = std::variant<CompleteMode, BipartiteMode>;

/// Exact expected weight of random_k_matching run to a maximal matching.
/// Complete graph on m nodes: every edge appears with probability
/// floor(m/2) / C(m,2), i.e. sum(w)/(m-1) for even m. Bipartite sides of
/// size s: sum(w)/s. Bipartite mode with unequal sides throws ParameterError.
double expected_random_weight(const WeightedInstance& inst, const RandomMode& mode);

}  // namespace ordmatch

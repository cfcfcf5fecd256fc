#include "ordmatch/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>
#include <sstream>

#include "ordmatch/error.hpp"

namespace ordmatch {

namespace {

class Deadline {
 public:
  explicit Deadline(std::chrono::milliseconds limit)
      : end_(std::chrono::steady_clock::now() + limit) {}

  // Cheap enough to call in inner loops; only reads the clock every 4096 ticks.
  void tick(const char* what) {
    if ((++ticks_ & 0xfff) != 0) return;
    if (std::chrono::steady_clock::now() > end_)
      throw BudgetExceeded(std::string(what) + " oracle exceeded its time limit");
  }

 private:
  std::chrono::steady_clock::time_point end_;
  std::uint64_t ticks_ = 0;
};

void check_size(int n, int limit, const char* what) {
  if (n > limit) {
    std::ostringstream msg;
    msg << what << " oracle limited to n <= " << limit << ", got n = " << n;
    throw BudgetExceeded(msg.str());
  }
}

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

}  // namespace

MatchingOptimum opt_matching(const WeightedInstance& inst, int k, const OracleBudget& budget) {
  const int n = inst.size();
  check_size(n, budget.max_n_matching, "matching");
  if (k < 0 || k > n / 2) throw ParameterError("matching size k must lie in [0, floor(n/2)]");
  Deadline deadline(budget.time_limit);

  // best[mask]: max weight of a perfect matching on the nodes of mask (even
  // popcount only). partner[mask]: mate of mask's lowest node in that optimum,
  // the smallest such mate on exact ties.
  const std::uint32_t full = 1u << n;
  std::vector<double> best(full, kNegInf);
  std::vector<std::int8_t> partner(full, -1);
  best[0] = 0.0;
  for (std::uint32_t mask = 1; mask < full; ++mask) {
    if (std::popcount(mask) % 2 != 0) continue;
    deadline.tick("matching");
    const int lo = std::countr_zero(mask);
    const std::uint32_t rest = mask & (mask - 1);
    for (std::uint32_t r = rest; r != 0; r &= r - 1) {
      const int j = std::countr_zero(r);
      const double v = inst.weight(lo, j) + best[rest & ~(1u << j)];
      if (v > best[mask]) {
        best[mask] = v;
        partner[mask] = static_cast<std::int8_t>(j);
      }
    }
  }

  auto edges_of = [&](std::uint32_t mask) {
    std::vector<Edge> out;
    while (mask != 0) {
      const int lo = std::countr_zero(mask);
      const int j = partner[mask];
      out.emplace_back(lo, j);
      mask &= ~((1u << lo) | (1u << j));
    }
    return out;
  };

  const int target = 2 * k;
  double chosen_weight = (k == 0) ? 0.0 : kNegInf;
  std::vector<Edge> chosen_edges;
  if (k > 0) {
    for (std::uint32_t mask = 1; mask < full; ++mask) {
      if (std::popcount(mask) != target) continue;
      if (best[mask] > chosen_weight) {
        chosen_weight = best[mask];
        chosen_edges = edges_of(mask);
      } else if (best[mask] == chosen_weight) {
        auto candidate = edges_of(mask);
        if (candidate < chosen_edges) {
          chosen_edges = std::move(candidate);
        }
      }
    }
  }
  return {Matching(n, chosen_edges), chosen_weight};
}

ClusteringOptimum opt_k_sum(const WeightedInstance& inst, int k, const OracleBudget& budget) {
  const int n = inst.size();
  check_size(n, budget.max_n_k_sum, "k-sum");
  if (k < 1 || n % k != 0) throw ParameterError("k-sum needs k dividing n");
  Deadline deadline(budget.time_limit);
  const int c = n / k;

  std::vector<int> assign(n, -1);
  std::vector<std::vector<Node>> parts(k);
  std::vector<std::vector<Node>> best_parts;
  double best = kNegInf;

  // Fills part `p` starting from its anchor; `from` is the next candidate.
  auto recurse = [&](auto&& self, int p, Node from, double acc) -> void {
    deadline.tick("k-sum");
    auto& part = parts[p];
    if (static_cast<int>(part.size()) == c) {
      if (p + 1 == k) {
        if (acc > best) {
          best = acc;
          best_parts = parts;
        }
        return;
      }
      Node anchor = 0;
      while (assign[anchor] >= 0) ++anchor;
      assign[anchor] = p + 1;
      parts[p + 1].push_back(anchor);
      self(self, p + 1, anchor + 1, acc);
      parts[p + 1].pop_back();
      assign[anchor] = -1;
      return;
    }
    const int need = c - static_cast<int>(part.size());
    for (Node x = from; x < n; ++x) {
      if (assign[x] >= 0) continue;
      int avail = 0;
      for (Node y = x; y < n; ++y) avail += assign[y] < 0;
      if (avail < need) break;
      double gain = 0.0;
      for (Node y : part) gain += inst.weight(x, y);
      assign[x] = p;
      part.push_back(x);
      self(self, p, x + 1, acc + gain);
      part.pop_back();
      assign[x] = -1;
    }
  };

  assign[0] = 0;
  parts[0].push_back(0);
  recurse(recurse, 0, 1, 0.0);
  return {Clustering{n, std::move(best_parts)}, best};
}

SubsetOptimum opt_densest(const WeightedInstance& inst, int k, const OracleBudget& budget) {
  const int n = inst.size();
  check_size(n, budget.max_n_densest, "densest");
  if (k < 1 || k > n) throw ParameterError("densest subgraph needs 1 <= k <= n");
  Deadline deadline(budget.time_limit);

  std::vector<Node> pick(k);
  for (int i = 0; i < k; ++i) pick[i] = i;
  std::vector<Node> best_pick;
  double best = kNegInf;
  for (;;) {
    deadline.tick("densest");
    double w = 0.0;
    for (int i = 0; i < k; ++i)
      for (int j = i + 1; j < k; ++j) w += inst.weight(pick[i], pick[j]);
    if (w > best) {
      best = w;
      best_pick = pick;
    }
    // Next combination in lexicographic order.
    int i = k - 1;
    while (i >= 0 && pick[i] == n - k + i) --i;
    if (i < 0) break;
    ++pick[i];
    for (int j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
  }
  return {Subset{n, std::move(best_pick)}, best};
}

TourOptimum opt_tsp(const WeightedInstance& inst, const OracleBudget& budget) {
  const int n = inst.size();
  if (n < 3) throw ParameterError("a tour needs at least 3 nodes");
  check_size(n, budget.max_n_tsp, "tsp");
  Deadline deadline(budget.time_limit);

  // Node 0 is the fixed start; masks range over nodes 1..n-1 (bit i-1).
  const int m = n - 1;
  const std::uint32_t full = 1u << m;
  std::vector<double> dp(static_cast<std::size_t>(full) * m, kNegInf);
  std::vector<std::int8_t> parent(static_cast<std::size_t>(full) * m, -1);
  auto at = [m](std::uint32_t mask, int j) { return static_cast<std::size_t>(mask) * m + j; };

  for (int j = 0; j < m; ++j) dp[at(1u << j, j)] = inst.weight(0, j + 1);
  for (std::uint32_t mask = 1; mask < full; ++mask) {
    deadline.tick("tsp");
    for (std::uint32_t r = mask; r != 0; r &= r - 1) {
      const int j = std::countr_zero(r);
      const double cur = dp[at(mask, j)];
      if (cur == kNegInf) continue;
      for (std::uint32_t free = (full - 1) & ~mask; free != 0; free &= free - 1) {
        const int t = std::countr_zero(free);
        const std::uint32_t next = mask | (1u << t);
        const double v = cur + inst.weight(j + 1, t + 1);
        if (v > dp[at(next, t)]) {
          dp[at(next, t)] = v;
          parent[at(next, t)] = static_cast<std::int8_t>(j);
        }
      }
    }
  }

  double best = kNegInf;
  int last = -1;
  for (int j = 0; j < m; ++j) {
    const double v = dp[at(full - 1, j)] + inst.weight(j + 1, 0);
    if (v > best) {
      best = v;
      last = j;
    }
  }

  std::vector<Node> order;
  std::uint32_t mask = full - 1;
  for (int j = last; j >= 0;) {
    order.push_back(j + 1);
    const int prev = parent[at(mask, j)];
    mask &= ~(1u << j);
    j = prev;
  }
  order.push_back(0);
  std::reverse(order.begin(), order.end());
  return {Tour{n, std::move(order)}, best};
}

}  // namespace ordmatch

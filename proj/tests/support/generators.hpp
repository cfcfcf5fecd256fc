#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <vector>

#include "ordmatch/instance.hpp"
#include "ordmatch/random.hpp"

// Instance sources for tests. Everything is seeded.

namespace testsupport {

using namespace ordmatch;

// Cycles through the three generated metric families.
inline WeightedInstance random_metric(int n, std::uint64_t seed) {
  GeneratorSpec spec;
  spec.family = static_cast<Family>(seed % 3);
  spec.n = n;
  spec.dimension = 2 + static_cast<int>(seed % 2);
  spec.seed = seed;
  return generate(spec);
}

inline WeightedInstance euclidean(int n, std::uint64_t seed, int dim = 2) {
  GeneratorSpec spec;
  spec.n = n;
  spec.dimension = dim;
  spec.seed = seed;
  return generate(spec);
}

// Weights in {1, 2}: always metric, full of ties.
inline WeightedInstance tie_heavy(int n, std::uint64_t seed) {
  RandomSource rng(seed);
  std::vector<std::vector<double>> w(n, std::vector<double>(n, 0.0));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) w[i][j] = w[j][i] = 1.0 + static_cast<double>(rng.uniform_index(2));
  WeightedInstance inst(w);
  validate_metric(inst, 0.0);
  return inst;
}

// Arbitrary nonnegative weights, usually non-metric.
inline WeightedInstance random_weights(int n, std::uint64_t seed, double lo = 0.0, double hi = 1.0) {
  RandomSource rng(seed);
  std::vector<std::vector<double>> w(n, std::vector<double>(n, 0.0));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) w[i][j] = w[j][i] = rng.uniform(lo, hi);
  return WeightedInstance(w);
}

// Weights in [1, h] with h = 1/(2 alpha) give
// w(i,k) >= 1 = alpha * 2h >= alpha * (w(i,j) + w(j,k)), so the
// friendship property holds by construction. With `widen` the range is
// stretched and callers must filter with check_friendship.
inline WeightedInstance friendship_candidate(int n, double alpha, std::uint64_t seed, double widen = 1.0) {
  const double hi = 1.0 / (2.0 * alpha) * widen;
  return random_weights(n, seed, 1.0, std::max(1.0, hi));
}

// Replaces every distinct weight value by a fresh value with the same
// relative order (zero stays zero). Equal weights stay equal, so the
// derived profile is unchanged while the cardinal structure is not.
inline WeightedInstance rank_preserving_remap(const WeightedInstance& inst, std::uint64_t seed) {
  std::vector<double> values(inst.data().begin(), inst.data().end());
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  RandomSource rng(seed);
  std::map<double, double> remap;
  double level = 0.0;
  for (double v : values) {
    if (v == 0.0) {
      remap[v] = 0.0;
      continue;
    }
    level += 0.1 + rng.uniform01() * 5.0;
    remap[v] = level;
  }
  const int n = inst.size();
  std::vector<double> w(inst.data().size());
  for (std::size_t i = 0; i < w.size(); ++i) w[i] = remap.at(inst.data()[i]);
  return WeightedInstance(n, std::move(w));
}

}  // namespace testsupport

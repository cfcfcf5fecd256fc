#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace ordmatch {

using Node = int;

enum class Family { EuclideanUniform, RandomMetricClosure, ClusteredGaussian, Explicit };

std::string_view family_name(Family f);
Family parse_family(std::string_view name);

struct InstanceMeta {
  Family family = Family::Explicit;
  std::uint64_t seed = 0;

  friend bool operator==(const InstanceMeta&, const InstanceMeta&) = default;
};

/// Ground-truth weights w(x, y) over n agents: a symmetric, nonnegative,
/// finite matrix with zero diagonal. Construction rejects anything else with
/// MalformedInstance, so every live instance is well formed.
///
/// The `metric` flag records whether triangle-inequality validation passed;
/// it starts false and is set by validate_metric.
class WeightedInstance {
 public:
  /// Row-major n*n matrix.
  WeightedInstance(int n, std::vector<double> weights);
  explicit WeightedInstance(const std::vector<std::vector<double>>& rows);

  int size() const { return n_; }
  double weight(Node x, Node y) const { return w_[static_cast<std::size_t>(x) * n_ + y]; }
  std::span<const double> row(Node x) const {
    return {w_.data() + static_cast<std::size_t>(x) * n_, static_cast<std::size_t>(n_)};
  }
  const std::vector<double>& data() const { return w_; }
  std::vector<std::vector<double>> rows() const;

  bool metric() const { return metric_; }
  void set_metric(bool metric) { metric_ = metric; }

  double max_weight() const;
  /// Sum over unordered pairs.
  double total_weight() const;

  const std::optional<std::vector<std::vector<double>>>& points() const { return points_; }
  void set_points(std::vector<std::vector<double>> points);
  const std::optional<InstanceMeta>& meta() const { return meta_; }
  void set_meta(InstanceMeta meta) { meta_ = meta; }

  friend bool operator==(const WeightedInstance&, const WeightedInstance&) = default;

 private:
  int n_;
  std::vector<double> w_;
  bool metric_ = false;
  std::optional<std::vector<std::vector<double>>> points_;
  std::optional<InstanceMeta> meta_;
};

/// Pure check: every ordered triple of distinct nodes satisfies
/// w(x,y) <= w(x,z) + w(z,y) + tol.
bool satisfies_triangle_inequality(const WeightedInstance& inst, double tol);

/// Runs the triangle check and records the outcome in the instance's flag.
bool validate_metric(WeightedInstance& inst, double tol = 0.0);

/// Tolerance used for floating-point generated instances: 1e-9 * max weight.
double default_metric_tolerance(const WeightedInstance& inst);

/// True iff w(i,k) >= alpha * (w(i,j) + w(j,k)) for every ordered triple of
/// distinct nodes. alpha must lie in [0, 0.5].
bool check_friendship(const WeightedInstance& inst, double alpha);

/// Strict per-agent rankings, most preferred first. This is the only input
/// ordinal algorithms are allowed to see.
class PreferenceProfile {
 public:
  /// ranking[i] must be a permutation of {0..n-1} \ {i}.
  explicit PreferenceProfile(std::vector<std::vector<Node>> ranking);

  int size() const { return static_cast<int>(ranking_.size()); }
  std::span<const Node> ranking(Node agent) const { return ranking_[agent]; }
  const std::vector<std::vector<Node>>& rankings() const { return ranking_; }

  /// 0-based position of `other` in agent's ranking.
  int position(Node agent, Node other) const { return pos_[static_cast<std::size_t>(agent) * size() + other]; }

  /// True iff agent ranks a strictly above b.
  bool prefers(Node agent, Node a, Node b) const { return position(agent, a) < position(agent, b); }

  friend bool operator==(const PreferenceProfile& a, const PreferenceProfile& b) {
    return a.ranking_ == b.ranking_;
  }

 private:
  std::vector<std::vector<Node>> ranking_;
  std::vector<int> pos_;
};

/// Sorts each agent's row by descending weight; equal weights go to the
/// lower agent index first.
PreferenceProfile derive_preferences(const WeightedInstance& inst);

/// True iff whenever agent i ranks j above k, w(i,j) >= w(i,k).
bool is_induced_by(const PreferenceProfile& prefs, const WeightedInstance& inst);

struct GeneratorSpec {
  Family family = Family::EuclideanUniform;
  int n = 2;
  int dimension = 2;
  std::uint64_t seed = 0;
  // Only read for Family::Explicit.
  std::vector<std::vector<double>> matrix;
};

/// Deterministic in the spec. Every family yields an instance whose metric
/// flag is set: exact check for euclidean families, 1e-9 relative tolerance
/// for the closure family. An explicit matrix that fails the check is
/// rejected.
WeightedInstance generate(const GeneratorSpec& spec);

}  // namespace ordmatch

#include "ordmatch/instance.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "ordmatch/error.hpp"
#include "ordmatch/random.hpp"

namespace ordmatch {

std::string_view family_name(Family f) {
  switch (f) {
    case Family::EuclideanUniform:
      return "euclidean-uniform";
    case Family::RandomMetricClosure:
      return "random-metric-closure";
    case Family::ClusteredGaussian:
      return "clustered-gaussian";
    case Family::Explicit:
      return "explicit";
  }
  return "explicit";
}

Family parse_family(std::string_view name) {
  for (Family f : {Family::EuclideanUniform, Family::RandomMetricClosure, Family::ClusteredGaussian,
                   Family::Explicit}) {
    if (family_name(f) == name) return f;
  }
  throw ParameterError("unsupported generator family: " + std::string(name));
}

namespace {

std::vector<double> flatten(const std::vector<std::vector<double>>& rows) {
  const std::size_t n = rows.size();
  std::vector<double> flat;
  flat.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    if (rows[i].size() != n) {
      std::ostringstream msg;
      msg << "row " << i << " has " << rows[i].size() << " entries, expected " << n;
      throw MalformedInstance(msg.str());
    }
    flat.insert(flat.end(), rows[i].begin(), rows[i].end());
  }
  return flat;
}

}  // namespace

WeightedInstance::WeightedInstance(int n, std::vector<double> weights) : n_(n), w_(std::move(weights)) {
  if (n < 2) throw MalformedInstance("instance needs at least 2 agents");
  if (w_.size() != static_cast<std::size_t>(n) * n) throw MalformedInstance("weight matrix is not n x n");
  for (int i = 0; i < n; ++i) {
    if (weight(i, i) != 0.0) {
      std::ostringstream msg;
      msg << "nonzero diagonal at " << i;
      throw MalformedInstance(msg.str());
    }
    for (int j = 0; j < n; ++j) {
      const double v = weight(i, j);
      if (!std::isfinite(v) || v < 0.0) {
        std::ostringstream msg;
        msg << "weight (" << i << "," << j << ") must be finite and nonnegative, got " << v;
        throw MalformedInstance(msg.str());
      }
      if (v != weight(j, i)) {
        std::ostringstream msg;
        msg << "asymmetric weights at (" << i << "," << j << ")";
        throw MalformedInstance(msg.str());
      }
    }
  }
}

WeightedInstance::WeightedInstance(const std::vector<std::vector<double>>& rows)
    : WeightedInstance(static_cast<int>(rows.size()), flatten(rows)) {}

std::vector<std::vector<double>> WeightedInstance::rows() const {
  std::vector<std::vector<double>> out(n_);
  for (int i = 0; i < n_; ++i) out[i].assign(row(i).begin(), row(i).end());
  return out;
}

double WeightedInstance::max_weight() const { return *std::max_element(w_.begin(), w_.end()); }

double WeightedInstance::total_weight() const {
  double sum = 0.0;
  for (int i = 0; i < n_; ++i)
    for (int j = i + 1; j < n_; ++j) sum += weight(i, j);
  return sum;
}

void WeightedInstance::set_points(std::vector<std::vector<double>> points) {
  if (static_cast<int>(points.size()) != n_) throw MalformedInstance("point count differs from n");
  points_ = std::move(points);
}

bool satisfies_triangle_inequality(const WeightedInstance& inst, double tol) {
  if (!(tol >= 0.0)) throw ParameterError("tolerance must be nonnegative");
  const int n = inst.size();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (y == x) continue;
      const double direct = inst.weight(x, y);
      for (int z = 0; z < n; ++z) {
        if (z == x || z == y) continue;
        if (direct > inst.weight(x, z) + inst.weight(z, y) + tol) return false;
      }
    }
  return true;
}

bool validate_metric(WeightedInstance& inst, double tol) {
  const bool ok = satisfies_triangle_inequality(inst, tol);
  inst.set_metric(ok);
  return ok;
}

double default_metric_tolerance(const WeightedInstance& inst) { return 1e-9 * inst.max_weight(); }

bool check_friendship(const WeightedInstance& inst, double alpha) {
  if (!(alpha >= 0.0 && alpha <= 0.5)) throw ParameterError("friendship alpha must lie in [0, 0.5]");
  const int n = inst.size();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (j == i) continue;
      for (int k = 0; k < n; ++k) {
        if (k == i || k == j) continue;
        if (inst.weight(i, k) < alpha * (inst.weight(i, j) + inst.weight(j, k))) return false;
      }
    }
  return true;
}

PreferenceProfile::PreferenceProfile(std::vector<std::vector<Node>> ranking) : ranking_(std::move(ranking)) {
  const int n = size();
  if (n < 2) throw ParameterError("preference profile needs at least 2 agents");
  pos_.assign(static_cast<std::size_t>(n) * n, -1);
  for (int i = 0; i < n; ++i) {
    const auto& r = ranking_[i];
    if (static_cast<int>(r.size()) != n - 1) throw ParameterError("ranking length must be n-1");
    for (int p = 0; p < n - 1; ++p) {
      const Node j = r[p];
      if (j < 0 || j >= n || j == i || pos_[static_cast<std::size_t>(i) * n + j] != -1) {
        std::ostringstream msg;
        msg << "ranking of agent " << i << " is not a permutation of the other agents";
        throw ParameterError(msg.str());
      }
      pos_[static_cast<std::size_t>(i) * n + j] = p;
    }
  }
}

PreferenceProfile derive_preferences(const WeightedInstance& inst) {
  const int n = inst.size();
  std::vector<std::vector<Node>> ranking(n);
  for (int i = 0; i < n; ++i) {
    auto& r = ranking[i];
    r.reserve(n - 1);
    for (int j = 0; j < n; ++j)
      if (j != i) r.push_back(j);
    const auto w = inst.row(i);
    std::stable_sort(r.begin(), r.end(), [&](Node a, Node b) { return w[a] > w[b]; });
  }
  return PreferenceProfile(std::move(ranking));
}

bool is_induced_by(const PreferenceProfile& prefs, const WeightedInstance& inst) {
  if (prefs.size() != inst.size()) return false;
  for (int i = 0; i < prefs.size(); ++i) {
    const auto r = prefs.ranking(i);
    for (std::size_t p = 1; p < r.size(); ++p)
      if (inst.weight(i, r[p - 1]) < inst.weight(i, r[p])) return false;
  }
  return true;
}

namespace {

std::vector<std::vector<double>> uniform_points(RandomSource& rng, int n, int dim) {
  std::vector<std::vector<double>> pts(n, std::vector<double>(dim));
  for (auto& p : pts)
    for (auto& c : p) c = rng.uniform01();
  return pts;
}

WeightedInstance from_points(const std::vector<std::vector<double>>& pts) {
  const int n = static_cast<int>(pts.size());
  std::vector<double> w(static_cast<std::size_t>(n) * n, 0.0);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      double s = 0.0;
      for (std::size_t c = 0; c < pts[i].size(); ++c) {
        const double d = pts[i][c] - pts[j][c];
        s += d * d;
      }
      w[static_cast<std::size_t>(i) * n + j] = w[static_cast<std::size_t>(j) * n + i] = std::sqrt(s);
    }
  WeightedInstance inst(n, std::move(w));
  inst.set_points(pts);
  return inst;
}

// Min-plus closure (Floyd-Warshall) over a symmetric matrix.
void metric_closure(std::vector<double>& w, int n) {
  for (int z = 0; z < n; ++z)
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) {
        const double via = w[static_cast<std::size_t>(x) * n + z] + w[static_cast<std::size_t>(z) * n + y];
        double& direct = w[static_cast<std::size_t>(x) * n + y];
        if (via < direct) direct = via;
      }
  // Relaxation order can leave last-bit asymmetry; mirror the upper triangle.
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y)
      w[static_cast<std::size_t>(y) * n + x] = w[static_cast<std::size_t>(x) * n + y];
}

}  // namespace

WeightedInstance generate(const GeneratorSpec& spec) {
  if (spec.family != Family::Explicit && spec.n < 2) throw ParameterError("generator needs n >= 2");
  if ((spec.family == Family::EuclideanUniform || spec.family == Family::ClusteredGaussian) &&
      spec.dimension < 1)
    throw ParameterError("euclidean families need dimension >= 1");

  RandomSource rng(spec.seed);
  std::optional<WeightedInstance> inst;
  double tol = 0.0;
  switch (spec.family) {
    case Family::EuclideanUniform:
      inst = from_points(uniform_points(rng, spec.n, spec.dimension));
      break;
    case Family::ClusteredGaussian: {
      const int clusters = std::max(2, spec.n / 4);
      const auto centers = uniform_points(rng, clusters, spec.dimension);
      std::vector<std::vector<double>> pts(spec.n, std::vector<double>(spec.dimension));
      for (auto& p : pts) {
        const auto& c = centers[rng.uniform_index(clusters)];
        for (int d = 0; d < spec.dimension; ++d) p[d] = c[d] + 0.05 * rng.normal();
      }
      inst = from_points(pts);
      break;
    }
    case Family::RandomMetricClosure: {
      const int n = spec.n;
      std::vector<double> w(static_cast<std::size_t>(n) * n, 0.0);
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
          w[static_cast<std::size_t>(i) * n + j] = w[static_cast<std::size_t>(j) * n + i] = rng.uniform01();
      metric_closure(w, n);
      inst.emplace(n, std::move(w));
      tol = default_metric_tolerance(*inst);
      break;
    }
    case Family::Explicit:
      inst.emplace(spec.matrix);
      break;
  }
  if (!validate_metric(*inst, tol)) {
    throw MalformedInstance(std::string("generated ") + std::string(family_name(spec.family)) +
                            " instance violates the triangle inequality");
  }
  inst->set_meta({spec.family, spec.seed});
  return *std::move(inst);
}

}  // namespace ordmatch

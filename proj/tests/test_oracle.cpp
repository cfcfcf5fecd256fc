#include <doctest.h>

#include "ordmatch/error.hpp"
#include "ordmatch/oracle.hpp"
#include "support/brute.hpp"
#include "support/generators.hpp"

using namespace ordmatch;

namespace {

WeightedInstance constant(int n, double c) {
  std::vector<std::vector<double>> w(n, std::vector<double>(n, c));
  for (int i = 0; i < n; ++i) w[i][i] = 0.0;
  return WeightedInstance(w);
}

}  // namespace

TEST_SUITE("oracle") {

TEST_CASE("opt_matching examples") {
  WeightedInstance w2({{0, 2, 1, 1}, {2, 0, 1, 1}, {1, 1, 0, 1}, {1, 1, 1, 0}});
  const auto a = opt_matching(w2, 2);
  CHECK(a.weight == 3.0);
  CHECK(a.matching == Matching(4, {{0, 1}, {2, 3}}));

  WeightedInstance w1({{0, 1, 1, 1}, {1, 0, 1, 1}, {1, 1, 0, 0.01}, {1, 1, 0.01, 0}});
  const auto b = opt_matching(w1, 2);
  CHECK(b.weight == 2.0);
  CHECK(b.matching == Matching(4, {{0, 2}, {1, 3}}));

  for (int n = 2; n <= 9; ++n) CHECK(opt_matching(constant(n, 1.5), n / 2).weight == doctest::Approx(1.5 * (n / 2)));
  CHECK(opt_matching(w2, 0).weight == 0.0);
  CHECK(opt_matching(w2, 0).matching.empty());
  CHECK_THROWS_AS(opt_matching(w2, 3), ParameterError);
}

TEST_CASE("opt_matching ties go to the lexicographically smallest edge list") {
  const auto flat = constant(6, 1.0);
  CHECK(opt_matching(flat, 3).matching.sorted_edges() == std::vector<Edge>{{0, 1}, {2, 3}, {4, 5}});
  CHECK(opt_matching(flat, 1).matching.sorted_edges() == std::vector<Edge>{{0, 1}});
  CHECK(opt_matching(flat, 2).matching.sorted_edges() == std::vector<Edge>{{0, 1}, {2, 3}});
  // k-matchings use exactly min(k, n/2) edges even when zero edges could be dropped.
  WeightedInstance zeroes({{0, 1, 0, 0}, {1, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}});
  CHECK(opt_matching(zeroes, 2).matching.size() == 2);
}

TEST_CASE("opt_matching agrees with plain recursion and is monotone in k") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const int n = 2 + static_cast<int>(seed % 10);
    const auto inst = seed % 2 ? testsupport::random_weights(n, seed) : testsupport::random_metric(n, seed);
    double prev = 0.0;
    for (int k = 0; k <= n / 2; ++k) {
      const auto r = opt_matching(inst, k);
      CHECK(r.weight == doctest::Approx(testsupport::brute_matching(inst, k)));
      CHECK(r.weight == doctest::Approx(matching_weight(r.matching, inst)));
      CHECK(r.matching.size() == static_cast<std::size_t>(k));
      CHECK(r.weight >= prev - 1e-12);
      prev = r.weight;
    }
  }
}

TEST_CASE("opt_k_sum examples and cross-checks") {
  for (std::uint64_t seed = 0; seed < 12; ++seed) {
    const int n = 4 + 2 * static_cast<int>(seed % 3);
    const auto inst = testsupport::euclidean(n, seed);
    const auto whole = opt_k_sum(inst, 1);
    CHECK(whole.weight == doctest::Approx(inst.total_weight()));
    const auto pairs = opt_k_sum(inst, n / 2);
    CHECK(pairs.weight == doctest::Approx(opt_matching(inst, n / 2).weight));
    const auto halves = opt_k_sum(inst, 2);
    CHECK(halves.weight == doctest::Approx(testsupport::brute_two_sum(inst)));
    for (const auto* c : {&whole.clustering, &pairs.clustering, &halves.clustering}) {
      check_clustering(*c);
    }
    CHECK(clustering_weight(halves.clustering, inst) == doctest::Approx(halves.weight));
  }
  const auto six = testsupport::euclidean(6, 42);
  CHECK(opt_k_sum(six, 3).weight == doctest::Approx(opt_matching(six, 3).weight));
  CHECK_THROWS_AS(opt_k_sum(six, 4), ParameterError);
  CHECK_THROWS_AS(opt_k_sum(testsupport::euclidean(12, 1), 2), BudgetExceeded);
}

TEST_CASE("opt_densest examples and local-search agreement") {
  const auto inst = testsupport::random_metric(10, 4);
  double heaviest = 0.0;
  for (Node x = 0; x < 10; ++x)
    for (Node y = x + 1; y < 10; ++y) heaviest = std::max(heaviest, inst.weight(x, y));
  CHECK(opt_densest(inst, 2).weight == heaviest);
  CHECK(opt_densest(inst, 10).weight == doctest::Approx(inst.total_weight()));
  CHECK(opt_densest(inst, 1).weight == 0.0);
  CHECK_THROWS_AS(opt_densest(inst, 11), ParameterError);

  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto w = testsupport::random_metric(10, 200 + seed);
    const auto r = opt_densest(w, 4);
    CHECK(r.subset.nodes.size() == 4);
    CHECK(subset_weight(r.subset, w) == doctest::Approx(r.weight));
    const double climbed = testsupport::hill_climb_densest(w, 4, seed, 60);
    CHECK(climbed <= r.weight + 1e-12);
    CHECK(climbed == doctest::Approx(r.weight));
  }
}

TEST_CASE("opt_tsp examples and permutation cross-check") {
  WeightedInstance tri({{0, 1, 2}, {1, 0, 4}, {2, 4, 0}});
  CHECK(opt_tsp(tri).weight == 7.0);
  CHECK(opt_tsp(constant(7, 2.0)).weight == doctest::Approx(14.0));
  CHECK_THROWS_AS(opt_tsp(constant(2, 1.0)), ParameterError);
  for (std::uint64_t seed = 0; seed < 6; ++seed) {
    const int n = 5 + static_cast<int>(seed % 4);
    const auto inst = seed % 2 ? testsupport::random_weights(n, seed) : testsupport::random_metric(n, seed);
    const auto r = opt_tsp(inst);
    check_tour(r.tour);
    CHECK(r.tour.order.front() == 0);
    CHECK(tour_weight(r.tour, inst) == doctest::Approx(r.weight));
    CHECK(r.weight == doctest::Approx(testsupport::brute_tsp(inst)));
  }
}

TEST_CASE("budgets are enforced, never approximated") {
  OracleBudget small;
  small.max_n_matching = 6;
  small.max_n_densest = 6;
  small.max_n_tsp = 6;
  small.max_n_k_sum = 6;
  const auto inst = testsupport::random_metric(8, 1);
  CHECK_THROWS_AS(opt_matching(inst, 4, small), BudgetExceeded);
  CHECK_THROWS_AS(opt_densest(inst, 4, small), BudgetExceeded);
  CHECK_THROWS_AS(opt_tsp(inst, small), BudgetExceeded);
  CHECK_THROWS_AS(opt_k_sum(inst, 2, small), BudgetExceeded);
  CHECK_THROWS_AS(opt_tsp(testsupport::random_metric(16, 1)), BudgetExceeded);

  OracleBudget instant;
  instant.time_limit = std::chrono::milliseconds(0);
  CHECK_THROWS_AS(opt_tsp(testsupport::random_metric(14, 2), instant), BudgetExceeded);
}

}  // TEST_SUITE

#include <doctest.h>

#include <algorithm>
#include <limits>

#include "ordmatch/error.hpp"
#include "ordmatch/harness.hpp"
#include "support/generators.hpp"

using namespace ordmatch;

namespace {

TrialConfig config(Problem p, Algorithm a, int n, int trials, int inner, int k = 0) {
  TrialConfig cfg;
  cfg.problem = p;
  cfg.algorithm = a;
  cfg.generator.n = n;
  cfg.trials = trials;
  cfg.inner_seeds = inner;
  cfg.base_seed = 1234;
  cfg.k = k;
  return cfg;
}

}  // namespace

TEST_SUITE("harness") {

TEST_CASE("names round-trip") {
  for (Problem p : {Problem::Mwm, Problem::Mkm, Problem::KSum, Problem::Densest, Problem::Tsp})
    CHECK(parse_problem(problem_name(p)) == p);
  for (Algorithm a : {Algorithm::Greedy, Algorithm::Random, Algorithm::Hybrid})
    CHECK(parse_algorithm(algorithm_name(a)) == a);
  CHECK(parse_format("json") == ReportFormat::Json);
  CHECK(parse_format("csv") == ReportFormat::Csv);
  CHECK_THROWS_AS(parse_format("xml"), FormatError);
  CHECK_THROWS_AS(parse_problem("vertex-cover"), ParameterError);
  CHECK_THROWS_AS(parse_algorithm("annealing"), ParameterError);
}

TEST_CASE("claimed bounds") {
  CHECK(claimed_bound(Problem::Mwm, Algorithm::Greedy, 10, 0) == 2.0);
  CHECK(claimed_bound(Problem::Mwm, Algorithm::Random, 10, 0) == 2.0);
  CHECK(claimed_bound(Problem::Mwm, Algorithm::Hybrid, 6, 0) == 1.6);
  CHECK(claimed_bound(Problem::Mkm, Algorithm::Greedy, 10, 3) == 2.0);
  CHECK(claimed_bound(Problem::KSum, Algorithm::Greedy, 8, 2) == 4.0);
  CHECK(claimed_bound(Problem::KSum, Algorithm::Hybrid, 8, 2) == doctest::Approx(3.2));
  CHECK(claimed_bound(Problem::KSum, Algorithm::Greedy, 9, 3) == 4.0);
  CHECK(claimed_bound(Problem::Densest, Algorithm::Greedy, 10, 4) == 4.0);
  CHECK(claimed_bound(Problem::Tsp, Algorithm::Greedy, 8, 0) == doctest::Approx(8.0 / 2.5));
  CHECK(claimed_bound(Problem::Tsp, Algorithm::Hybrid, 6, 0) == doctest::Approx(6.4 / (3.0 - 4.0 / 6.0)));
  CHECK_THROWS_AS(claimed_bound(Problem::Mkm, Algorithm::Hybrid, 10, 3), ParameterError);
  CHECK_THROWS_AS(claimed_bound(Problem::KSum, Algorithm::Hybrid, 9, 3), ParameterError);
  CHECK_THROWS_AS(claimed_bound(Problem::Tsp, Algorithm::Greedy, 7, 0), ParameterError);
  CHECK_THROWS_AS(claimed_bound(Problem::KSum, Algorithm::Greedy, 9, 2), ParameterError);
  CHECK_THROWS_AS(claimed_bound(Problem::Densest, Algorithm::Random, 10, 4), ParameterError);
}

TEST_CASE("solve produces the right solution kind") {
  const auto inst = testsupport::random_metric(8, 5);
  const auto prefs = derive_preferences(inst);
  RandomSource rng(3);
  CHECK(std::holds_alternative<Matching>(solve(Problem::Mwm, Algorithm::Hybrid, prefs, 0, rng)));
  CHECK(std::get<Matching>(solve(Problem::Mkm, Algorithm::Random, prefs, 3, rng)).size() == 3);
  CHECK(std::get<Clustering>(solve(Problem::KSum, Algorithm::Greedy, prefs, 2, rng)).parts.size() == 2);
  CHECK(std::get<Subset>(solve(Problem::Densest, Algorithm::Greedy, prefs, 4, rng)).nodes.size() == 4);
  CHECK(std::get<Tour>(solve(Problem::Tsp, Algorithm::Greedy, prefs, 0, rng)).order.size() == 8);
  CHECK_THROWS_AS(solve(Problem::Mkm, Algorithm::Greedy, prefs, 5, rng), ParameterError);
  CHECK_THROWS_AS(solve(Problem::Mkm, Algorithm::Hybrid, prefs, 2, rng), ParameterError);
  const auto nine = derive_preferences(testsupport::random_metric(9, 5));
  CHECK_THROWS_AS(solve(Problem::KSum, Algorithm::Random, nine, 3, rng), ParameterError);
  CHECK(std::get<Clustering>(solve(Problem::KSum, Algorithm::Greedy, nine, 3, rng)).parts.size() == 3);
}

TEST_CASE("exact solutions re-evaluate to their weights") {
  const auto inst = testsupport::random_metric(8, 9);
  for (auto [p, k] : {std::pair{Problem::Mwm, 0}, std::pair{Problem::Mkm, 2}, std::pair{Problem::KSum, 2},
                      std::pair{Problem::Densest, 4}, std::pair{Problem::Tsp, 0}}) {
    const auto r = solve_exact(p, inst, k);
    CHECK(solution_weight(r.solution, inst) == doctest::Approx(r.weight));
  }
}

TEST_CASE("greedy mwm passes at desk scale") {
  const auto r = run_trials(config(Problem::Mwm, Algorithm::Greedy, 10, 40, 1));
  CHECK(r.verdict);
  CHECK(r.records.size() == 40);
  CHECK(r.max_ratio <= 2.0 + 1e-9);
  CHECK_FALSE(r.randomized);
  for (std::size_t t = 0; t < r.records.size(); ++t) {
    CHECK(r.records[t].seed == 1234 + t);
    CHECK(r.records[t].ratio >= 1.0 - 1e-9);
  }
}

TEST_CASE("hybrid mwm passes at desk scale") {
  const auto r = run_trials(config(Problem::Mwm, Algorithm::Hybrid, 6, 10, 2000));
  CHECK(r.verdict);
  CHECK(r.randomized);
  for (const auto& rec : r.records) {
    CHECK(rec.samples == 2000);
    CHECK(rec.ratio <= 1.6 + 3 * rec.std_error + 1e-9);
  }
}

TEST_CASE("all-equal weights give ratio 1") {
  TrialConfig cfg = config(Problem::Mwm, Algorithm::Greedy, 0, 1, 1);
  cfg.generator.family = Family::Explicit;
  cfg.generator.matrix = std::vector<std::vector<double>>(6, std::vector<double>(6, 1.0));
  for (int i = 0; i < 6; ++i) cfg.generator.matrix[i][i] = 0.0;
  const auto r = run_trials(cfg);
  REQUIRE(r.records.size() == 1);
  CHECK(r.records[0].ratio == 1.0);
  CHECK(r.n == 6);
  CHECK(r.verdict);
}

TEST_CASE("tsp with greedy input averages over every start") {
  const auto r = run_trials(config(Problem::Tsp, Algorithm::Greedy, 8, 5, 1));
  CHECK(r.verdict);
  for (const auto& rec : r.records) {
    CHECK(rec.samples == 8);
    CHECK(rec.std_error == 0.0);
  }
}

TEST_CASE("replay is byte-identical") {
  for (const auto& cfg : {config(Problem::Mwm, Algorithm::Random, 8, 4, 100), config(Problem::KSum, Algorithm::Hybrid, 8, 3, 50, 2),
                          config(Problem::Densest, Algorithm::Greedy, 9, 3, 1, 4)}) {
    const auto a = run_trials(cfg);
    const auto b = run_trials(cfg);
    CHECK(report_emit(a, ReportFormat::Json) == report_emit(b, ReportFormat::Json));
    CHECK(report_emit(a, ReportFormat::Csv) == report_emit(b, ReportFormat::Csv));
  }
}

TEST_CASE("report emission") {
  RatioReport empty;
  CHECK(report_emit(empty, ReportFormat::Csv) == "seed,opt,alg,ratio\n");

  RatioReport one;
  one.bound = 2.0;
  one.records.push_back({7, 2.0, 1.0, 2.0, 0.0, 1});
  finalize_report(one);
  CHECK(report_emit(one, ReportFormat::Csv) == "seed,opt,alg,ratio\n7,2.0,1.0,2.0\n");
  CHECK(one.verdict);
  CHECK(one.max_ratio == 2.0);

  one.records.push_back({8, 1.0, 2.0, 0.5, 0.0, 1});
  finalize_report(one);
  CHECK_FALSE(one.verdict);  // a ratio below 1 means a broken oracle

  RatioReport none;
  finalize_report(none);
  CHECK_FALSE(none.verdict);

  CHECK(format_double(0.1) == "0.1");
  CHECK(format_double(3.0) == "3.0");
  CHECK(format_double(1e300) == "1e+300");
}

TEST_CASE("json reports round-trip losslessly") {
  auto r = run_trials(config(Problem::Mwm, Algorithm::Random, 8, 3, 64));
  const auto text = report_emit(r, ReportFormat::Json);
  const auto back = report_from_json(Json::parse(text));
  CHECK(back == r);
  CHECK(report_emit(back, ReportFormat::Json) == text);
  CHECK(Json::parse(text)["schema"] == 1);

  RatioReport recomputed = back;
  finalize_report(recomputed);
  CHECK(recomputed == r);

  r.records.push_back({1, 1.0, 0.0, std::numeric_limits<double>::infinity(), 0.0, 1});
  finalize_report(r);
  const auto inf_text = report_emit(r, ReportFormat::Json);
  const auto inf_back = report_from_json(Json::parse(inf_text));
  CHECK(report_emit(inf_back, ReportFormat::Json) == inf_text);
  CHECK_FALSE(inf_back.verdict);

  CHECK_THROWS_AS(report_from_json(Json::parse(R"({"schema": 2})")), FormatError);
  CHECK_THROWS_AS(report_from_json(Json::parse(R"({"schema": 1})")), FormatError);
}

TEST_CASE("table summary has one row per pair") {
  const auto configs = table1_configs(5, 1, 20);
  CHECK(configs.size() == 9);
  std::vector<RatioReport> reports;
  for (const auto& cfg : configs) reports.push_back(run_trials(cfg));
  const auto csv = summary_emit(reports, ReportFormat::Csv);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 10);
  CHECK(csv.rfind("problem,algorithm,n,k,trials,bound,max_ratio,mean_ratio,verdict\n", 0) == 0);
  const auto json = Json::parse(summary_emit(reports, ReportFormat::Json));
  CHECK(json["schema"] == 1);
  CHECK(json["rows"].size() == 9);
}

TEST_CASE("invalid configurations are rejected") {
  CHECK_THROWS_AS(run_trials(config(Problem::Mwm, Algorithm::Greedy, 6, 0, 1)), ParameterError);
  CHECK_THROWS_AS(run_trials(config(Problem::Mwm, Algorithm::Random, 6, 1, 0)), ParameterError);
  CHECK_THROWS_AS(run_trials(config(Problem::Mwm, Algorithm::Greedy, 22, 1, 1)), BudgetExceeded);
}

}  // TEST_SUITE

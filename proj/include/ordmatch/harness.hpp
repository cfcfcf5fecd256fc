#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "ordmatch/instance.hpp"
#include "ordmatch/io.hpp"
#include "ordmatch/matching.hpp"
#include "ordmatch/oracle.hpp"
#include "ordmatch/random.hpp"
#include "ordmatch/reductions.hpp"

namespace ordmatch {

enum class Problem { Mwm, Mkm, KSum, Densest, Tsp };
enum class Algorithm { Greedy, Random, Hybrid };
enum class ReportFormat { Json, Csv };

std::string_view problem_name(Problem p);
Problem parse_problem(std::string_view name);
std::string_view algorithm_name(Algorithm a);
Algorithm parse_algorithm(std::string_view name);
ReportFormat parse_format(std::string_view name);

using Solution = std::variant<Matching, Clustering, Subset, Tour>;

/// Builds a solution from the profile alone. For ksum, densest and tsp the
/// algorithm names the matching routine fed to the reduction. ksum with an
/// odd part size accepts only the greedy routine. `k` is ignored by mwm and
/// tsp.
Solution solve(Problem problem, Algorithm algorithm, const PreferenceProfile& prefs, int k, RandomSource& rng);
double solution_weight(const Solution& s, const WeightedInstance& inst);
Json solution_to_json(const Solution& s);

/// Exact optimum weight and solution for the problem.
struct OracleResult {
  Solution solution;
  double weight;
};
OracleResult solve_exact(Problem problem, const WeightedInstance& inst, int k, const OracleBudget& budget = {});

/// Proven worst-case OPT / ALG for the pair, n and k. Throws ParameterError
/// for pairs without a guarantee.
double claimed_bound(Problem problem, Algorithm algorithm, int n, int k);

/// Whether the pair's output depends on the random stream.
bool is_randomized(Problem problem, Algorithm algorithm);

struct TrialConfig {
  Problem problem = Problem::Mwm;
  Algorithm algorithm = Algorithm::Greedy;
  /// Family, n and dimension are used; the seed of trial t is base_seed + t.
  GeneratorSpec generator;
  int trials = 1;
  /// Algorithm seeds per instance for randomized pairs.
  int inner_seeds = 1000;
  std::uint64_t base_seed = 0;
  int k = 0;
  OracleBudget budget;
};

struct TrialRecord {
  std::uint64_t seed = 0;
  double opt = 0.0;
  /// Algorithm weight, or its mean over the inner seeds.
  double alg = 0.0;
  double ratio = 0.0;
  /// Standard error of the ratio; 0 for deterministic or exact expectations.
  double std_error = 0.0;
  int samples = 1;

  friend bool operator==(const TrialRecord&, const TrialRecord&) = default;
};

struct RatioReport {
  int schema = 1;
  std::string problem;
  std::string algorithm;
  std::string family;
  int n = 0;
  int k = 0;
  std::uint64_t base_seed = 0;
  int inner_seeds = 0;
  bool randomized = false;
  double bound = 0.0;
  std::vector<TrialRecord> records;
  double max_ratio = 0.0;
  double mean_ratio = 0.0;
  /// Standard error of mean_ratio across trials.
  double std_error = 0.0;
  bool verdict = false;

  friend bool operator==(const RatioReport&, const RatioReport&) = default;
};

/// Generates cfg.trials instances, solves each exactly and with the
/// algorithm, and checks the claimed bound. Deterministic pairs pass when
/// every ratio is within the bound. Randomized pairs compare OPT / E[ALG]
/// per instance against bound + 3 standard errors, where E[ALG] is the mean
/// over cfg.inner_seeds algorithm seeds. Tsp with greedy input is evaluated
/// exactly by enumerating every start node.
RatioReport run_trials(const TrialConfig& cfg);

/// Recomputes max/mean/std-error and the verdict from the records.
void finalize_report(RatioReport& r);

/// JSON carries everything; CSV is a "seed,opt,alg,ratio" header plus one
/// row per record.
std::string report_emit(const RatioReport& r, ReportFormat format);
RatioReport report_from_json(const Json& j);

/// One verdict row per report.
std::string summary_emit(const std::vector<RatioReport>& reports, ReportFormat format);

/// Desk-scale configurations covering every row of the results table.
std::vector<TrialConfig> table1_configs(std::uint64_t base_seed, int trials, int inner_seeds);

/// Shortest round-trip decimal form, always containing a '.' or exponent.
std::string format_double(double v);

}  // namespace ordmatch

#include "ordmatch/harness.hpp"

#include <charconv>
#include <cmath>
#include <limits>
#include <sstream>

#include "ordmatch/error.hpp"
#include "ordmatch/ordinal.hpp"

namespace ordmatch {

std::string_view problem_name(Problem p) {
  switch (p) {
    case Problem::Mwm:
      return "mwm";
    case Problem::Mkm:
      return "mkm";
    case Problem::KSum:
      return "ksum";
    case Problem::Densest:
      return "densest";
    case Problem::Tsp:
      return "tsp";
  }
  return "mwm";
}

Problem parse_problem(std::string_view name) {
  for (Problem p : {Problem::Mwm, Problem::Mkm, Problem::KSum, Problem::Densest, Problem::Tsp})
    if (problem_name(p) == name) return p;
  throw ParameterError("unknown problem: " + std::string(name));
}

std::string_view algorithm_name(Algorithm a) {
  switch (a) {
    case Algorithm::Greedy:
      return "greedy";
    case Algorithm::Random:
      return "random";
    case Algorithm::Hybrid:
      return "hybrid";
  }
  return "greedy";
}

Algorithm parse_algorithm(std::string_view name) {
  for (Algorithm a : {Algorithm::Greedy, Algorithm::Random, Algorithm::Hybrid})
    if (algorithm_name(a) == name) return a;
  throw ParameterError("unknown algorithm: " + std::string(name));
}

ReportFormat parse_format(std::string_view name) {
  if (name == "json") return ReportFormat::Json;
  if (name == "csv") return ReportFormat::Csv;
  throw FormatError("unsupported format: " + std::string(name));
}

namespace {

Matching perfect_matching(Algorithm algorithm, const PreferenceProfile& prefs, RandomSource& rng) {
  const int n = prefs.size();
  switch (algorithm) {
    case Algorithm::Greedy:
      return greedy_k_matching(prefs, n / 2);
    case Algorithm::Random:
      return random_k_matching(EdgePool::complete(n), n / 2, rng);
    case Algorithm::Hybrid:
      return hybrid_matching(prefs, rng);
  }
  throw ParameterError("unknown algorithm");
}

Matching k_matching(Algorithm algorithm, const PreferenceProfile& prefs, int k, RandomSource& rng) {
  if (k == 0) return Matching(prefs.size());
  switch (algorithm) {
    case Algorithm::Greedy:
      return greedy_k_matching(prefs, k);
    case Algorithm::Random:
      return random_k_matching(EdgePool::complete(prefs.size()), k, rng);
    case Algorithm::Hybrid:
      break;
  }
  throw ParameterError("hybrid matching only builds perfect matchings");
}

void check_k(Problem problem, int n, int k) {
  switch (problem) {
    case Problem::Mkm:
      if (k < 1 || k > n / 2) throw ParameterError("mkm needs 1 <= k <= floor(n/2)");
      break;
    case Problem::KSum:
      if (k < 1 || n % k != 0) throw ParameterError("ksum needs k dividing n");
      break;
    case Problem::Densest:
      if (k < 1 || k > n) throw ParameterError("densest needs 1 <= k <= n");
      break;
    case Problem::Mwm:
    case Problem::Tsp:
      break;
  }
}

}  // namespace

Solution solve(Problem problem, Algorithm algorithm, const PreferenceProfile& prefs, int k, RandomSource& rng) {
  const int n = prefs.size();
  check_k(problem, n, k);
  switch (problem) {
    case Problem::Mwm:
      return perfect_matching(algorithm, prefs, rng);
    case Problem::Mkm:
      return k_matching(algorithm, prefs, k, rng);
    case Problem::KSum: {
      const int part = n / k;
      if (part % 2 == 0) return matching_to_clusters(perfect_matching(algorithm, prefs, rng), k);
      if (algorithm != Algorithm::Greedy)
        throw ParameterError("ksum with an odd part size needs the greedy matching");
      return matching_to_clusters(k_matching(algorithm, prefs, (n - k) / 2, rng), k);
    }
    case Problem::Densest:
      return matching_to_subset(k_matching(algorithm, prefs, k / 2, rng), k);
    case Problem::Tsp: {
      const Matching m = perfect_matching(algorithm, prefs, rng);
      return matching_to_tour(m, prefs, rng);
    }
  }
  throw ParameterError("unknown problem");
}

double solution_weight(const Solution& s, const WeightedInstance& inst) {
  struct Visitor {
    const WeightedInstance& inst;
    double operator()(const Matching& m) const { return matching_weight(m, inst); }
    double operator()(const Clustering& c) const { return clustering_weight(c, inst); }
    double operator()(const Subset& s) const { return subset_weight(s, inst); }
    double operator()(const Tour& t) const { return tour_weight(t, inst); }
  };
  return std::visit(Visitor{inst}, s);
}

Json solution_to_json(const Solution& s) {
  struct Visitor {
    Json operator()(const Matching& m) const { return matching_to_json(m); }
    Json operator()(const Clustering& c) const { return clustering_to_json(c); }
    Json operator()(const Subset& s) const { return subset_to_json(s); }
    Json operator()(const Tour& t) const { return tour_to_json(t); }
  };
  return std::visit(Visitor{}, s);
}

OracleResult solve_exact(Problem problem, const WeightedInstance& inst, int k, const OracleBudget& budget) {
  const int n = inst.size();
  check_k(problem, n, k);
  switch (problem) {
    case Problem::Mwm: {
      auto r = opt_matching(inst, n / 2, budget);
      return {std::move(r.matching), r.weight};
    }
    case Problem::Mkm: {
      auto r = opt_matching(inst, k, budget);
      return {std::move(r.matching), r.weight};
    }
    case Problem::KSum: {
      auto r = opt_k_sum(inst, k, budget);
      return {std::move(r.clustering), r.weight};
    }
    case Problem::Densest: {
      auto r = opt_densest(inst, k, budget);
      return {std::move(r.subset), r.weight};
    }
    case Problem::Tsp: {
      auto r = opt_tsp(inst, budget);
      return {std::move(r.tour), r.weight};
    }
  }
  throw ParameterError("unknown problem");
}

double claimed_bound(Problem problem, Algorithm algorithm, int n, int k) {
  check_k(problem, n, k);
  auto matching_factor = [&]() {
    switch (algorithm) {
      case Algorithm::Greedy:
      case Algorithm::Random:
        return 2.0;
      case Algorithm::Hybrid:
        return 1.6;
    }
    return 2.0;
  };
  switch (problem) {
    case Problem::Mwm:
      return matching_factor();
    case Problem::Mkm:
      if (algorithm != Algorithm::Greedy) break;
      return 2.0;
    case Problem::KSum:
      if ((n / k) % 2 != 0 && algorithm != Algorithm::Greedy) break;
      return 2.0 * matching_factor();
    case Problem::Densest:
      if (algorithm != Algorithm::Greedy) break;
      return 4.0;
    case Problem::Tsp:
      if (n < 4 || n % 2 != 0) throw ParameterError("tsp bound needs even n >= 4");
      return 4.0 * matching_factor() / (3.0 - 4.0 / n);
  }
  std::ostringstream msg;
  msg << "no approximation guarantee for " << problem_name(problem) << " with " << algorithm_name(algorithm);
  throw ParameterError(msg.str());
}

bool is_randomized(Problem problem, Algorithm algorithm) {
  return algorithm != Algorithm::Greedy || problem == Problem::Tsp;
}

namespace {

double safe_ratio(double opt, double alg) {
  if (alg > 0.0) return opt / alg;
  return opt > 0.0 ? std::numeric_limits<double>::infinity() : 1.0;
}

constexpr double kSlack = 1e-9;

}  // namespace

void finalize_report(RatioReport& r) {
  r.max_ratio = 0.0;
  double sum = 0.0;
  for (const auto& rec : r.records) {
    r.max_ratio = std::max(r.max_ratio, rec.ratio);
    sum += rec.ratio;
  }
  const double count = static_cast<double>(r.records.size());
  r.mean_ratio = r.records.empty() ? 0.0 : sum / count;
  double ss = 0.0;
  for (const auto& rec : r.records) ss += (rec.ratio - r.mean_ratio) * (rec.ratio - r.mean_ratio);
  r.std_error = r.records.size() > 1 ? std::sqrt(ss / (count - 1.0) / count) : 0.0;

  r.verdict = !r.records.empty();
  for (const auto& rec : r.records) {
    if (!(rec.ratio >= 1.0 - kSlack)) r.verdict = false;
    if (!(rec.ratio <= r.bound + 3.0 * rec.std_error + kSlack)) r.verdict = false;
  }
}

RatioReport run_trials(const TrialConfig& cfg) {
  if (cfg.trials < 1) throw ParameterError("trials must be >= 1");
  if (cfg.inner_seeds < 1) throw ParameterError("inner seed count must be >= 1");
  const int n = cfg.generator.family == Family::Explicit ? static_cast<int>(cfg.generator.matrix.size())
                                                         : cfg.generator.n;

  RatioReport report;
  report.problem = problem_name(cfg.problem);
  report.algorithm = algorithm_name(cfg.algorithm);
  report.family = family_name(cfg.generator.family);
  report.n = n;
  report.k = cfg.k;
  report.base_seed = cfg.base_seed;
  report.randomized = is_randomized(cfg.problem, cfg.algorithm);
  report.inner_seeds = report.randomized ? cfg.inner_seeds : 1;
  report.bound = claimed_bound(cfg.problem, cfg.algorithm, n, cfg.k);

  for (int t = 0; t < cfg.trials; ++t) {
    GeneratorSpec spec = cfg.generator;
    spec.seed = cfg.base_seed + static_cast<std::uint64_t>(t);
    const WeightedInstance inst = generate(spec);
    const PreferenceProfile prefs = derive_preferences(inst);

    TrialRecord rec;
    rec.seed = spec.seed;
    rec.opt = solve_exact(cfg.problem, inst, cfg.k, cfg.budget).weight;

    if (cfg.problem == Problem::Tsp && cfg.algorithm == Algorithm::Greedy) {
      // The only randomness is the start node; average over all of them.
      const Matching m = greedy_k_matching(prefs, n / 2);
      double sum = 0.0;
      for (Node s = 0; s < n; ++s) sum += tour_weight(matching_to_tour_from(m, prefs, s), inst);
      rec.alg = sum / n;
      rec.samples = n;
      rec.ratio = safe_ratio(rec.opt, rec.alg);
    } else if (report.randomized) {
      double sum = 0.0;
      double sum_sq = 0.0;
      for (int j = 0; j < cfg.inner_seeds; ++j) {
        RandomSource rng(derive_seed(spec.seed, static_cast<std::uint64_t>(j)));
        const double w = solution_weight(solve(cfg.problem, cfg.algorithm, prefs, cfg.k, rng), inst);
        sum += w;
        sum_sq += w * w;
      }
      const double count = cfg.inner_seeds;
      rec.alg = sum / count;
      rec.samples = cfg.inner_seeds;
      rec.ratio = safe_ratio(rec.opt, rec.alg);
      if (cfg.inner_seeds > 1 && rec.alg > 0.0) {
        const double var = std::max(0.0, (sum_sq - count * rec.alg * rec.alg) / (count - 1.0));
        rec.std_error = rec.ratio * std::sqrt(var / count) / rec.alg;
      }
    } else {
      RandomSource unused(spec.seed);
      rec.alg = solution_weight(solve(cfg.problem, cfg.algorithm, prefs, cfg.k, unused), inst);
      rec.ratio = safe_ratio(rec.opt, rec.alg);
    }
    report.records.push_back(rec);
  }
  finalize_report(report);
  return report;
}

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  std::string s(buf, res.ptr);
  if (s.find_first_of(".e") == std::string::npos) s += ".0";
  return s;
}

namespace {

// Non-finite doubles become strings so JSON stays lossless.
Json number_json(double v) {
  if (std::isfinite(v)) return v;
  return format_double(v);
}

double number_from_json(const Json& j) {
  if (j.is_number()) return j.get<double>();
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    if (s == "inf") return std::numeric_limits<double>::infinity();
    if (s == "-inf") return -std::numeric_limits<double>::infinity();
    if (s == "nan") return std::numeric_limits<double>::quiet_NaN();
  }
  throw FormatError("expected a number");
}

}  // namespace

std::string report_emit(const RatioReport& r, ReportFormat format) {
  if (format == ReportFormat::Csv) {
    std::string out = "seed,opt,alg,ratio\n";
    for (const auto& rec : r.records) {
      out += std::to_string(rec.seed) + ',' + format_double(rec.opt) + ',' + format_double(rec.alg) + ',' +
             format_double(rec.ratio) + '\n';
    }
    return out;
  }
  Json j;
  j["schema"] = r.schema;
  j["problem"] = r.problem;
  j["algorithm"] = r.algorithm;
  j["family"] = r.family;
  j["n"] = r.n;
  j["k"] = r.k;
  j["base_seed"] = r.base_seed;
  j["inner_seeds"] = r.inner_seeds;
  j["randomized"] = r.randomized;
  j["bound"] = number_json(r.bound);
  Json records = Json::array();
  for (const auto& rec : r.records) {
    Json row;
    row["seed"] = rec.seed;
    row["opt"] = number_json(rec.opt);
    row["alg"] = number_json(rec.alg);
    row["ratio"] = number_json(rec.ratio);
    row["std_error"] = number_json(rec.std_error);
    row["samples"] = rec.samples;
    records.push_back(std::move(row));
  }
  j["records"] = std::move(records);
  j["max_ratio"] = number_json(r.max_ratio);
  j["mean_ratio"] = number_json(r.mean_ratio);
  j["std_error"] = number_json(r.std_error);
  j["verdict"] = r.verdict ? "pass" : "fail";
  return j.dump(2) + "\n";
}

RatioReport report_from_json(const Json& j) {
  try {
    RatioReport r;
    r.schema = j.at("schema").get<int>();
    if (r.schema != 1) throw FormatError("unsupported report schema");
    r.problem = j.at("problem").get<std::string>();
    r.algorithm = j.at("algorithm").get<std::string>();
    r.family = j.at("family").get<std::string>();
    r.n = j.at("n").get<int>();
    r.k = j.at("k").get<int>();
    r.base_seed = j.at("base_seed").get<std::uint64_t>();
    r.inner_seeds = j.at("inner_seeds").get<int>();
    r.randomized = j.at("randomized").get<bool>();
    r.bound = number_from_json(j.at("bound"));
    for (const auto& row : j.at("records")) {
      TrialRecord rec;
      rec.seed = row.at("seed").get<std::uint64_t>();
      rec.opt = number_from_json(row.at("opt"));
      rec.alg = number_from_json(row.at("alg"));
      rec.ratio = number_from_json(row.at("ratio"));
      rec.std_error = number_from_json(row.at("std_error"));
      rec.samples = row.at("samples").get<int>();
      r.records.push_back(rec);
    }
    r.max_ratio = number_from_json(j.at("max_ratio"));
    r.mean_ratio = number_from_json(j.at("mean_ratio"));
    r.std_error = number_from_json(j.at("std_error"));
    r.verdict = j.at("verdict").get<std::string>() == "pass";
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(std::string("malformed report: ") + e.what());
  }
}

std::string summary_emit(const std::vector<RatioReport>& reports, ReportFormat format) {
  if (format == ReportFormat::Csv) {
    std::string out = "problem,algorithm,n,k,trials,bound,max_ratio,mean_ratio,verdict\n";
    for (const auto& r : reports) {
      out += r.problem + ',' + r.algorithm + ',' + std::to_string(r.n) + ',' + std::to_string(r.k) + ',' +
             std::to_string(r.records.size()) + ',' + format_double(r.bound) + ',' + format_double(r.max_ratio) +
             ',' + format_double(r.mean_ratio) + ',' + (r.verdict ? "pass" : "fail") + '\n';
    }
    return out;
  }
  Json j;
  j["schema"] = 1;
  Json rows = Json::array();
  for (const auto& r : reports) {
    Json row;
    row["problem"] = r.problem;
    row["algorithm"] = r.algorithm;
    row["n"] = r.n;
    row["k"] = r.k;
    row["trials"] = r.records.size();
    row["bound"] = number_json(r.bound);
    row["max_ratio"] = number_json(r.max_ratio);
    row["mean_ratio"] = number_json(r.mean_ratio);
    row["verdict"] = r.verdict ? "pass" : "fail";
    rows.push_back(std::move(row));
  }
  j["rows"] = std::move(rows);
  return j.dump(2) + "\n";
}

std::vector<TrialConfig> table1_configs(std::uint64_t base_seed, int trials, int inner_seeds) {
  struct Row {
    Problem problem;
    Algorithm algorithm;
    int n;
    int k;
  };
  const Row rows[] = {
      {Problem::Mwm, Algorithm::Greedy, 10, 0},   {Problem::Mwm, Algorithm::Random, 10, 0},
      {Problem::Mwm, Algorithm::Hybrid, 6, 0},    {Problem::Mkm, Algorithm::Greedy, 10, 3},
      {Problem::KSum, Algorithm::Greedy, 8, 2},   {Problem::KSum, Algorithm::Hybrid, 8, 2},
      {Problem::Densest, Algorithm::Greedy, 10, 4}, {Problem::Tsp, Algorithm::Greedy, 8, 0},
      {Problem::Tsp, Algorithm::Hybrid, 6, 0},
  };
  std::vector<TrialConfig> out;
  for (const Row& row : rows) {
    TrialConfig cfg;
    cfg.problem = row.problem;
    cfg.algorithm = row.algorithm;
    cfg.generator.family = Family::EuclideanUniform;
    cfg.generator.n = row.n;
    cfg.generator.dimension = 2;
    cfg.trials = trials;
    cfg.inner_seeds = inner_seeds;
    cfg.base_seed = base_seed;
    cfg.k = row.k;
    out.push_back(cfg);
  }
  return out;
}

}  // namespace ordmatch

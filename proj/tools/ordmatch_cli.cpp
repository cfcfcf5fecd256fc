// ordmatch command-line front end. Exit status: 0 when every requested
// verdict passes, 1 when a verdict fails, 2 on bad input.

#include <CLI11.hpp>

#include <cstdio>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "ordmatch/error.hpp"
#include "ordmatch/fixtures.hpp"
#include "ordmatch/harness.hpp"
#include "ordmatch/instance.hpp"
#include "ordmatch/io.hpp"
#include "ordmatch/ordinal.hpp"

using namespace ordmatch;

namespace {

struct Common {
  std::uint64_t seed = 0;
  std::string out;
  std::string format = "json";
};

void add_common(CLI::App* cmd, Common& c) {
  cmd->add_option("--seed", c.seed, "Random seed");
  cmd->add_option("--out", c.out, "Output file (default: stdout)");
  cmd->add_option("--format", c.format, "json or csv")->capture_default_str();
}

void emit(const Common& c, const std::string& text) {
  if (c.out.empty()) {
    std::cout << text;
    std::cout.flush();
  } else {
    write_text_file(c.out, text);
  }
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

std::string csv_join(const std::vector<std::string>& cells) {
  std::string line;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) line += ',';
    line += cells[i];
  }
  return line + '\n';
}

Rational parse_rational_arg(const std::string& s) {
  const auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rational(std::stoll(s));
    return Rational(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
  } catch (const std::exception&) {
    throw ParameterError("expected a rational like 1/100, got " + s);
  }
}

// --- gen ---------------------------------------------------------------

struct GenArgs {
  std::string family = "euclidean-uniform";
  int n = 8;
  int dimension = 2;
  std::string matrix;
};

int run_gen(const Common& c, const GenArgs& a) {
  GeneratorSpec spec;
  spec.family = parse_family(a.family);
  spec.n = a.n;
  spec.dimension = a.dimension;
  spec.seed = c.seed;
  if (spec.family == Family::Explicit) {
    if (a.matrix.empty()) throw ParameterError("explicit family needs --matrix FILE");
    spec.matrix = instance_from_json(read_json_file(a.matrix)).rows();
  }
  const auto inst = generate(spec);
  if (parse_format(c.format) == ReportFormat::Csv) {
    std::string out;
    for (const auto& row : inst.rows()) {
      std::vector<std::string> cells;
      for (double v : row) cells.push_back(format_double(v));
      out += csv_join(cells);
    }
    emit(c, out);
  } else {
    Json j;
    j["schema"] = 1;
    const Json body = instance_to_json(inst);
    for (const auto& [key, value] : body.items()) j[key] = value;
    emit(c, dump(j));
  }
  return 0;
}

// --- prefs -------------------------------------------------------------

int run_prefs(const Common& c, const std::string& instance_file) {
  const auto prefs = derive_preferences(instance_from_json(read_json_file(instance_file)));
  if (parse_format(c.format) == ReportFormat::Csv) {
    std::string out = "agent,ranking\n";
    for (Node i = 0; i < prefs.size(); ++i) {
      std::string r;
      for (Node x : prefs.ranking(i)) r += (r.empty() ? "" : " ") + std::to_string(x);
      out += std::to_string(i) + ',' + r + '\n';
    }
    emit(c, out);
  } else {
    Json j;
    j["schema"] = 1;
    const Json body = profile_to_json(prefs);
    for (const auto& [key, value] : body.items()) j[key] = value;
    emit(c, dump(j));
  }
  return 0;
}

// --- solve / oracle ----------------------------------------------------

struct SolveArgs {
  std::string problem = "mwm";
  std::string algorithm = "greedy";
  std::string prefs;
  std::string instance;
  int k = 0;
};

int run_solve(const Common& c, const SolveArgs& a) {
  if (a.prefs.empty() && a.instance.empty()) throw ParameterError("solve needs --prefs or --instance");
  std::optional<WeightedInstance> inst;
  if (!a.instance.empty()) inst = instance_from_json(read_json_file(a.instance));
  // Algorithms never see weights: with only --instance the profile is
  // derived first and the weights are used for scoring alone.
  const PreferenceProfile prefs = a.prefs.empty() ? derive_preferences(*inst) : profile_from_json(read_json_file(a.prefs));
  if (inst && inst->size() != prefs.size()) throw ParameterError("profile and instance disagree on n");
  const Problem problem = parse_problem(a.problem);
  const Algorithm algorithm = parse_algorithm(a.algorithm);
  RandomSource rng(c.seed);
  const Solution s = solve(problem, algorithm, prefs, a.k, rng);
  const std::optional<double> weight = inst ? std::optional(solution_weight(s, *inst)) : std::nullopt;

  if (parse_format(c.format) == ReportFormat::Csv) {
    emit(c, "problem,algorithm,seed,weight\n" + csv_join({a.problem, a.algorithm, std::to_string(c.seed),
                                                          weight ? format_double(*weight) : ""}));
  } else {
    Json j;
    j["schema"] = 1;
    j["problem"] = a.problem;
    j["algorithm"] = a.algorithm;
    j["k"] = a.k;
    j["seed"] = c.seed;
    j["solution"] = solution_to_json(s);
    if (weight) j["weight"] = *weight;
    emit(c, dump(j));
  }
  return 0;
}

int run_oracle(const Common& c, const SolveArgs& a) {
  if (a.instance.empty()) throw ParameterError("oracle needs --instance");
  const auto inst = instance_from_json(read_json_file(a.instance));
  const auto r = solve_exact(parse_problem(a.problem), inst, a.k);
  if (parse_format(c.format) == ReportFormat::Csv) {
    emit(c, "problem,k,weight\n" + csv_join({a.problem, std::to_string(a.k), format_double(r.weight)}));
  } else {
    Json j;
    j["schema"] = 1;
    j["problem"] = a.problem;
    j["k"] = a.k;
    j["weight"] = r.weight;
    j["solution"] = solution_to_json(r.solution);
    emit(c, dump(j));
  }
  return 0;
}

// --- bench -------------------------------------------------------------

struct BenchArgs {
  bool table1 = false;
  std::string problem = "mwm";
  std::string algorithm = "greedy";
  std::string family = "euclidean-uniform";
  int n = 10;
  int dimension = 2;
  int k = 0;
  int trials = 20;
  int inner = 1000;
};

int run_bench(const Common& c, const BenchArgs& a) {
  const ReportFormat format = parse_format(c.format);
  if (a.table1) {
    std::vector<RatioReport> reports;
    bool all = true;
    for (const auto& cfg : table1_configs(c.seed, a.trials, a.inner)) {
      reports.push_back(run_trials(cfg));
      all = all && reports.back().verdict;
    }
    emit(c, summary_emit(reports, format));
    return all ? 0 : 1;
  }
  TrialConfig cfg;
  cfg.problem = parse_problem(a.problem);
  cfg.algorithm = parse_algorithm(a.algorithm);
  cfg.generator.family = parse_family(a.family);
  if (cfg.generator.family == Family::Explicit) throw ParameterError("bench generates its instances; pick a random family");
  cfg.generator.n = a.n;
  cfg.generator.dimension = a.dimension;
  cfg.trials = a.trials;
  cfg.inner_seeds = a.inner;
  cfg.base_seed = c.seed;
  cfg.k = a.k;
  const RatioReport r = run_trials(cfg);
  emit(c, report_emit(r, format));
  return r.verdict ? 0 : 1;
}

// --- fixtures ----------------------------------------------------------

struct FixtureArgs {
  std::string name = "all";
  int n = 3;
  int k = 1;
  bool nonmetric = false;
  std::string eps = "1/100";
};

int run_fixtures(const Common& c, const FixtureArgs& a) {
  const Rational eps = parse_rational_arg(a.eps);
  std::vector<Fixture> fixtures;
  if (a.name == "four-agent" || a.name == "all") fixtures.push_back(build_fixture_claim22(eps));
  if (a.name == "kmatching" || a.name == "all") fixtures.push_back(build_fixture_kmatching_lb(a.n, !a.nonmetric, a.k, eps));
  if (a.name == "eight-agent" || a.name == "all") fixtures.push_back(build_fixture_53());
  if (fixtures.empty()) throw ParameterError("unknown fixture " + a.name + " (four-agent, kmatching, eight-agent, all)");

  bool all = true;
  for (const auto& f : fixtures) all = all && f.verified();
  if (parse_format(c.format) == ReportFormat::Csv) {
    std::string out = "fixture,quantity,value,expected,relation,provenance,holds\n";
    for (const auto& f : fixtures) {
      for (const auto& q : f.quantities) {
        std::ostringstream v, e;
        v << q.value.numerator() << '/' << q.value.denominator();
        e << q.expected.numerator() << '/' << q.expected.denominator();
        out += csv_join({f.name, q.name, v.str(), e.str(), q.relation == Relation::Equal ? "eq" : "ge",
                         q.provenance == Provenance::Published ? "published" : "derived", q.holds() ? "true" : "false"});
      }
    }
    emit(c, out);
  } else {
    Json j;
    j["schema"] = 1;
    Json list = Json::array();
    for (const auto& f : fixtures) list.push_back(fixture_to_json(f));
    j["fixtures"] = std::move(list);
    j["verified"] = all;
    emit(c, dump(j));
  }
  return all ? 0 : 1;
}

// --- verify-metric -----------------------------------------------------

struct VerifyArgs {
  std::string instance;
  std::optional<double> tol;
  std::optional<double> friendship;
};

int run_verify(const Common& c, const VerifyArgs& a) {
  auto inst = instance_from_json(read_json_file(a.instance));
  const double tol = a.tol ? *a.tol : default_metric_tolerance(inst);
  const bool metric = validate_metric(inst, tol);
  std::optional<bool> friendly;
  if (a.friendship) friendly = check_friendship(inst, *a.friendship);
  const bool ok = metric && friendly.value_or(true);
  if (parse_format(c.format) == ReportFormat::Csv) {
    emit(c, "n,tol,metric,friendship\n" + csv_join({std::to_string(inst.size()), format_double(tol),
                                                   metric ? "true" : "false",
                                                   friendly ? (*friendly ? "true" : "false") : ""}));
  } else {
    Json j;
    j["schema"] = 1;
    j["n"] = inst.size();
    j["tol"] = tol;
    j["metric"] = metric;
    if (friendly) {
      j["friendship_alpha"] = *a.friendship;
      j["friendship"] = *friendly;
    }
    j["verdict"] = ok ? "pass" : "fail";
    emit(c, dump(j));
  }
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Ordinal matching approximations: generators, solvers, exact oracles and ratio benchmarks"};
  app.require_subcommand(1);

  Common common;
  GenArgs gen_args;
  std::string prefs_instance;
  SolveArgs solve_args;
  SolveArgs oracle_args;
  BenchArgs bench_args;
  FixtureArgs fixture_args;
  VerifyArgs verify_args;

  auto* gen = app.add_subcommand("gen", "Generate a weighted instance");
  add_common(gen, common);
  gen->add_option("--family", gen_args.family, "euclidean-uniform, random-metric-closure, clustered-gaussian, explicit")
      ->capture_default_str();
  gen->add_option("--n", gen_args.n, "Agent count")->capture_default_str();
  gen->add_option("--dim", gen_args.dimension, "Dimension for point families")->capture_default_str();
  gen->add_option("--matrix", gen_args.matrix, "Instance JSON holding the matrix (explicit family)");

  auto* prefs = app.add_subcommand("prefs", "Derive the preference profile of an instance");
  add_common(prefs, common);
  prefs->add_option("--instance", prefs_instance, "Instance JSON")->required();

  auto* solve_cmd = app.add_subcommand("solve", "Run an ordinal algorithm");
  add_common(solve_cmd, common);
  solve_cmd->add_option("--problem", solve_args.problem, "mwm, mkm, ksum, densest, tsp")->capture_default_str();
  solve_cmd->add_option("--algorithm", solve_args.algorithm, "greedy, random, hybrid")->capture_default_str();
  solve_cmd->add_option("--prefs", solve_args.prefs, "Profile JSON (the algorithm's only input)");
  solve_cmd->add_option("--instance", solve_args.instance, "Instance JSON, used to score the solution");
  solve_cmd->add_option("--k", solve_args.k, "Matching size, cluster count or subset size");

  auto* oracle = app.add_subcommand("oracle", "Solve exactly");
  add_common(oracle, common);
  oracle->add_option("--problem", oracle_args.problem, "mwm, mkm, ksum, densest, tsp")->capture_default_str();
  oracle->add_option("--instance", oracle_args.instance, "Instance JSON")->required();
  oracle->add_option("--k", oracle_args.k, "Matching size, cluster count or subset size");

  auto* bench = app.add_subcommand("bench", "Measure OPT/ALG ratios against the proven bounds");
  add_common(bench, common);
  bench->add_flag("--table1", bench_args.table1, "Run every (problem, algorithm) pair and print a verdict summary");
  bench->add_option("--problem", bench_args.problem)->capture_default_str();
  bench->add_option("--algorithm", bench_args.algorithm)->capture_default_str();
  bench->add_option("--family", bench_args.family)->capture_default_str();
  bench->add_option("--n", bench_args.n)->capture_default_str();
  bench->add_option("--dim", bench_args.dimension)->capture_default_str();
  bench->add_option("--k", bench_args.k)->capture_default_str();
  bench->add_option("--trials", bench_args.trials, "Instances; trial t uses seed + t")->capture_default_str();
  bench->add_option("--inner", bench_args.inner, "Algorithm seeds per instance (randomized pairs)")
      ->capture_default_str();

  auto* fixtures = app.add_subcommand("fixtures", "Build and verify the lower-bound instances");
  add_common(fixtures, common);
  fixtures->add_option("--name", fixture_args.name, "four-agent, kmatching, eight-agent or all")->capture_default_str();
  fixtures->add_option("--n", fixture_args.n, "Pair count for kmatching")->capture_default_str();
  fixtures->add_option("--k", fixture_args.k, "Matching size for kmatching")->capture_default_str();
  fixtures->add_flag("--nonmetric", fixture_args.nonmetric, "Non-metric kmatching variant");
  fixtures->add_option("--eps", fixture_args.eps, "Epsilon as a rational")->capture_default_str();

  auto* verify = app.add_subcommand("verify-metric", "Check the triangle inequality (and optionally friendship)");
  add_common(verify, common);
  verify->add_option("--instance", verify_args.instance, "Instance JSON")->required();
  verify->add_option("--tol", verify_args.tol, "Absolute tolerance (default 1e-9 * max weight)");
  verify->add_option("--friendship", verify_args.friendship, "Also check the alpha-friendship property");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*gen) return run_gen(common, gen_args);
    if (*prefs) return run_prefs(common, prefs_instance);
    if (*solve_cmd) return run_solve(common, solve_args);
    if (*oracle) return run_oracle(common, oracle_args);
    if (*bench) return run_bench(common, bench_args);
    if (*fixtures) return run_fixtures(common, fixture_args);
    if (*verify) return run_verify(common, verify_args);
  } catch (const Error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
  return 2;
}

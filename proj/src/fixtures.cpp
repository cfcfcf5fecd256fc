#include "ordmatch/fixtures.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <sstream>

#include "ordmatch/error.hpp"
#include "ordmatch/ordinal.hpp"

namespace ordmatch {

bool Fixture::verified() const {
  return std::all_of(quantities.begin(), quantities.end(), [](const auto& q) { return q.holds(); }) &&
         std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.passed; });
}

const FixtureQuantity& Fixture::quantity(const std::string& key) const {
  for (const auto& q : quantities)
    if (q.name == key) return q;
  throw ParameterError("fixture " + name + " has no quantity \"" + key + "\"");
}

Rational matching_value(const Matching& m, const RationalMatrix& w) {
  Rational sum = 0;
  for (const Edge& e : m.edges()) sum += w[e.u][e.v];
  return sum;
}

Rational exact_opt_matching(const RationalMatrix& w, int k) {
  const int n = static_cast<int>(w.size());
  if (n > 20) throw BudgetExceeded("exact rational matching limited to 20 nodes");
  k = std::min(k, n / 2);
  if (k <= 0) return 0;
  const std::uint32_t full = 1u << n;
  std::vector<std::optional<Rational>> best(full);
  best[0] = Rational(0);
  Rational answer = 0;
  for (std::uint32_t mask = 1; mask < full; ++mask) {
    const int pc = std::popcount(mask);
    if (pc % 2 != 0 || pc > 2 * k) continue;
    const int lo = std::countr_zero(mask);
    const std::uint32_t rest = mask & (mask - 1);
    for (std::uint32_t r = rest; r != 0; r &= r - 1) {
      const int j = std::countr_zero(r);
      const Rational v = w[lo][j] + *best[rest & ~(1u << j)];
      if (!best[mask] || v > *best[mask]) best[mask] = v;
    }
    if (pc == 2 * k && *best[mask] > answer) answer = *best[mask];
  }
  return answer;
}

WeightedInstance to_instance(const RationalMatrix& w) {
  std::vector<std::vector<double>> rows(w.size());
  for (std::size_t i = 0; i < w.size(); ++i)
    for (const Rational& v : w[i]) rows[i].push_back(boost::rational_cast<double>(v));
  WeightedInstance inst(rows);
  validate_metric(inst, 0.0);
  return inst;
}

namespace {

RationalMatrix constant_matrix(int n, Rational v) {
  RationalMatrix w(n, std::vector<Rational>(n, v));
  for (int i = 0; i < n; ++i) w[i][i] = 0;
  return w;
}

void set_weight(RationalMatrix& w, Node x, Node y, Rational v) { w[x][y] = w[y][x] = v; }

bool induced_exact(const PreferenceProfile& prefs, const RationalMatrix& w) {
  for (int i = 0; i < prefs.size(); ++i) {
    const auto r = prefs.ranking(i);
    for (std::size_t p = 1; p < r.size(); ++p)
      if (w[i][r[p - 1]] < w[i][r[p]]) return false;
  }
  return true;
}

// Mixture weight x on `first` (1 - x on `second`) that equalizes the two
// ratios OPT_s / E_s[value]. Linear in x.
Rational equalizing_mixture(const RationalMatrix& w1, const RationalMatrix& w2, const Matching& first,
                            const Matching& second) {
  const Rational opt1 = exact_opt_matching(w1, static_cast<int>(w1.size()) / 2);
  const Rational opt2 = exact_opt_matching(w2, static_cast<int>(w2.size()) / 2);
  const Rational a1 = matching_value(first, w1), b1 = matching_value(second, w1);
  const Rational a2 = matching_value(first, w2), b2 = matching_value(second, w2);
  // opt1 * (b2 + x (a2 - b2)) = opt2 * (b1 + x (a1 - b1))
  return (opt2 * b1 - opt1 * b2) / (opt1 * (a2 - b2) - opt2 * (a1 - b1));
}

Rational mixture_worst_ratio(const std::vector<const RationalMatrix*>& sets, const Matching& first,
                             const Matching& second, Rational x) {
  Rational worst = 0;
  for (const RationalMatrix* w : sets) {
    const Rational opt = exact_opt_matching(*w, static_cast<int>(w->size()) / 2);
    const Rational value = x * matching_value(first, *w) + (1 - x) * matching_value(second, *w);
    worst = std::max(worst, opt / value);
  }
  return worst;
}

std::vector<std::string> pair_labels(int pairs) {
  std::vector<std::string> labels;
  for (int i = 1; i <= pairs; ++i) {
    labels.push_back("a" + std::to_string(i));
    labels.push_back("b" + std::to_string(i));
  }
  return labels;
}

std::string rational_text(const Rational& r) {
  std::ostringstream s;
  s << r.numerator() << '/' << r.denominator();
  return s.str();
}

}  // namespace

Fixture build_fixture_claim22(Rational eps) {
  if (eps <= 0 || eps >= 1) throw ParameterError("epsilon must lie in (0, 1)");
  enum : Node { a, b, c, d };
  PreferenceProfile profile({{b, c, d}, {a, d, c}, {a, b, d}, {b, a, c}});

  RationalMatrix w1 = constant_matrix(4, 1);
  set_weight(w1, c, d, eps);
  RationalMatrix w2 = constant_matrix(4, 1);
  set_weight(w2, a, b, 2);
  RationalMatrix w1_limit = constant_matrix(4, 1);
  set_weight(w1_limit, c, d, 0);

  const Matching m1(4, {{a, b}, {c, d}});
  const Matching m2(4, {{a, c}, {b, d}});
  const Matching m3(4, {{a, d}, {b, c}});

  Fixture f{"four-agent", {"a", "b", "c", "d"}, profile, {{"W1", w1}, {"W2", w2}}, {{"M1", m1}, {"M2", m2}, {"M3", m3}},
            {}, {}};

  const Rational opt1 = exact_opt_matching(w1, 2);
  const Rational opt2 = exact_opt_matching(w2, 2);
  auto& q = f.quantities;
  q.push_back({"opt W1", opt1, 2});
  q.push_back({"opt W2", opt2, 3});
  q.push_back({"value W1 M1", matching_value(m1, w1), 1 + eps});
  q.push_back({"value W1 M2", matching_value(m2, w1), 2});
  q.push_back({"value W2 M2", matching_value(m2, w2), 2});
  q.push_back({"ratio W1 M2", opt1 / matching_value(m2, w1), 1});
  q.push_back({"ratio W2 M2", opt2 / matching_value(m2, w2), Rational(3, 2)});

  Rational best_deterministic = -1;
  for (const auto& [name, m] : f.matchings) {
    const Rational worst = std::max(opt1 / matching_value(m, w1), opt2 / matching_value(m, w2));
    if (best_deterministic < 0 || worst < best_deterministic) best_deterministic = worst;
  }
  q.push_back({"best deterministic ratio", best_deterministic, Rational(3, 2)});

  const Rational x_limit = equalizing_mixture(w1_limit, w2, m1, m2);
  q.push_back({"mixture x (eps->0)", x_limit, Rational(2, 5)});
  q.push_back({"mixture worst ratio (eps->0)", mixture_worst_ratio({&w1_limit, &w2}, m1, m2, x_limit),
               Rational(5, 4)});
  q.push_back({"mixture x", equalizing_mixture(w1, w2, m1, m2), Rational(2) / (5 - 3 * eps), Relation::Equal,
               Provenance::Derived});

  f.checks.push_back({"profile induced by W1", induced_exact(profile, w1)});
  f.checks.push_back({"profile induced by W2", induced_exact(profile, w2)});
  f.checks.push_back({"W1 metric", to_instance(w1).metric()});
  f.checks.push_back({"W2 metric", to_instance(w2).metric()});
  f.checks.push_back({"greedy picks M1", greedy_k_matching(profile, 2) == m1});
  return f;
}

Fixture build_fixture_kmatching_lb(int n, bool metric, int k, Rational eps) {
  if (n < 2) throw ParameterError("lower-bound family needs n >= 2 pairs");
  if (n > 10) throw ParameterError("lower-bound family limited to n <= 10 pairs");
  if (k < 1 || k > n) throw ParameterError("k must lie in [1, n]");
  if (!metric && (eps <= 0 || eps >= 1)) throw ParameterError("epsilon must lie in (0, 1)");
  const int agents = 2 * n;

  // a_i = 2i, b_i = 2i + 1; each ranks its partner first, then by index.
  std::vector<std::vector<Node>> ranking(agents);
  for (Node x = 0; x < agents; ++x) {
    const Node partner = x ^ 1;
    ranking[x].push_back(partner);
    for (Node y = 0; y < agents; ++y)
      if (y != x && y != partner) ranking[x].push_back(y);
  }
  PreferenceProfile profile(std::move(ranking));

  auto variant = [&](int special, Rational rest) {
    const Rational heavy = metric ? Rational(2) : Rational(1);
    RationalMatrix w = constant_matrix(agents, metric ? Rational(1) : rest);
    set_weight(w, 2 * special, 2 * special + 1, heavy);
    return w;
  };

  Fixture f{metric ? "kmatching-lb-metric" : "kmatching-lb-nonmetric", pair_labels(n), profile, {}, {}, {}, {}};
  for (int i = 0; i < n; ++i) f.weight_sets.push_back({"special pair " + std::to_string(i + 1), variant(i, eps)});

  const Matching pick = greedy_k_matching(profile, k);
  f.matchings.push_back({"greedy", pick});

  auto expected_value = [&](Rational rest) {
    Rational sum = 0;
    for (int i = 0; i < n; ++i) sum += matching_value(pick, variant(i, rest));
    return sum / n;
  };
  const Rational e_value = expected_value(eps);
  const Rational opt = exact_opt_matching(variant(0, eps), k);

  auto& q = f.quantities;
  if (metric) {
    q.push_back({"expected value", e_value, Rational(k * (n + 1), n)});
    q.push_back({"opt", opt, Rational(k + 1), Relation::Equal, Provenance::Derived});
    q.push_back({"ratio", opt / e_value, Rational(n * (k + 1), k * (n + 1))});
  } else {
    q.push_back({"expected value", e_value, k * (1 + (n - 1) * eps) / n});
    q.push_back({"opt", opt, 1 + (k - 1) * eps, Relation::Equal, Provenance::Derived});
    q.push_back({"ratio", opt / e_value, n * (1 + (k - 1) * eps) / (k * (1 + (n - 1) * eps)), Relation::Equal,
                 Provenance::Derived});
    const Rational opt_limit = exact_opt_matching(variant(0, 0), k);
    q.push_back({"ratio (eps->0)", opt_limit / expected_value(0), Rational(n, k)});
  }

  bool induced = true;
  bool metric_flags = true;
  for (const auto& ws : f.weight_sets) {
    induced = induced && induced_exact(profile, ws.weights);
    metric_flags = metric_flags && to_instance(ws.weights).metric() == metric;
  }
  f.checks.push_back({"profile induced by every variant", induced});
  f.checks.push_back({metric ? "every variant metric" : "every variant non-metric", metric_flags});
  f.checks.push_back({"greedy takes mutual pairs", std::all_of(pick.edges().begin(), pick.edges().end(),
                                                               [](const Edge& e) { return e.v == (e.u ^ 1); })});
  return f;
}

Fixture build_fixture_53() {
  auto a = [](int i) { return static_cast<Node>(2 * (i - 1)); };
  auto b = [](int i) { return static_cast<Node>(2 * (i - 1) + 1); };
  constexpr int agents = 8;

  // Rank of a_i and b_i is i; each agent lists the others by rank, then index.
  std::vector<std::vector<Node>> ranking(agents);
  for (Node x = 0; x < agents; ++x)
    for (Node y = 0; y < agents; ++y)
      if (y != x) ranking[x].push_back(y);
  PreferenceProfile profile(std::move(ranking));

  std::vector<NamedMatching> matchings = {
      {"M1", Matching(agents, {{a(1), b(1)}, {a(2), b(2)}, {a(3), b(3)}, {a(4), b(4)}})},
      {"M2", Matching(agents, {{a(1), b(1)}, {a(2), a(3)}, {b(2), b(3)}, {a(4), b(4)}})},
      {"M3", Matching(agents, {{a(1), a(2)}, {b(1), b(2)}, {a(3), b(3)}, {a(4), b(4)}})},
      {"M4", Matching(agents, {{a(1), a(2)}, {b(1), a(3)}, {b(2), b(3)}, {a(4), b(4)}})},
      {"M5", Matching(agents, {{a(1), a(3)}, {b(1), b(3)}, {a(2), a(4)}, {b(2), b(4)}})},
      {"M6", Matching(agents, {{a(1), a(3)}, {b(1), b(3)}, {a(2), b(2)}, {a(4), b(4)}})},
  };

  auto touching = [&](std::initializer_list<Node> hubs) {
    RationalMatrix w = constant_matrix(agents, 0);
    for (Node h : hubs)
      for (Node y = 0; y < agents; ++y)
        if (y != h) set_weight(w, h, y, 1);
    return w;
  };
  RationalMatrix s1 = constant_matrix(agents, 0);
  set_weight(s1, a(1), b(1), 1);
  RationalMatrix s2 = s1;
  for (Node x : {a(1), b(1)})
    for (Node y : {a(2), b(2)}) set_weight(s2, x, y, 1);
  RationalMatrix s3 = touching({a(1), b(1)});
  set_weight(s3, a(2), b(2), 1);
  RationalMatrix s4 = touching({a(1), b(1), a(2), b(2)});

  Fixture f{"eight-agent", pair_labels(4), profile,
            {{"weights-1", s1}, {"weights-2", s2}, {"weights-3", s3}, {"weights-4", s4}}, matchings, {}, {}};

  const int published_values[4][6] = {
      {1, 1, 0, 0, 0, 0}, {1, 1, 2, 1, 0, 0}, {2, 1, 2, 2, 2, 3}, {2, 3, 2, 3, 4, 3}};
  auto& q = f.quantities;
  std::vector<Rational> column(6, 0);
  Rational opt_total = 0;
  Rational uniform_worst = 0;
  for (int s = 0; s < 4; ++s) {
    const auto& ws = f.weight_sets[s];
    const Rational opt = exact_opt_matching(ws.weights, agents / 2);
    q.push_back({"opt " + ws.name, opt, s + 1});
    opt_total += opt;
    Rational uniform_value = 0;
    for (int m = 0; m < 6; ++m) {
      const Rational v = matching_value(matchings[m].matching, ws.weights);
      q.push_back({"value " + ws.name + " " + matchings[m].name, v, published_values[s][m]});
      column[m] += v;
      uniform_value += v / 6;
    }
    uniform_worst = std::max(uniform_worst, opt / uniform_value);
  }
  for (int m = 0; m < 6; ++m)
    q.push_back({"summed coefficient " + matchings[m].name, column[m], 6, Relation::Equal, Provenance::Derived});
  q.push_back({"summed opt", opt_total, 10, Relation::Equal, Provenance::Derived});
  // Summing A(W) >= c * OPT(W) over the sets gives sum_j x_j col_j >= c * opt_total
  // with sum_j x_j = 1, so c <= max_j col_j / opt_total.
  const Rational c_bound = *std::max_element(column.begin(), column.end()) / opt_total;
  q.push_back({"c upper bound", c_bound, Rational(3, 5)});
  q.push_back({"ratio lower bound", 1 / c_bound, Rational(5, 3)});
  q.push_back({"uniform mixture worst ratio", uniform_worst, Rational(5, 3), Relation::AtLeast, Provenance::Derived});

  bool induced = true;
  bool any_non_metric = false;
  for (const auto& ws : f.weight_sets) {
    induced = induced && induced_exact(profile, ws.weights);
    any_non_metric = any_non_metric || !to_instance(ws.weights).metric();
  }
  f.checks.push_back({"profile induced by every weight set", induced});
  f.checks.push_back({"triangle inequality violated", any_non_metric});
  return f;
}

namespace {

Rational parse_rational(const Json& j) {
  if (!j.is_string()) throw FormatError("rational must be a \"p/q\" string");
  const auto s = j.get<std::string>();
  const auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rational(std::stoll(s));
    const long long den = std::stoll(s.substr(slash + 1));
    if (den == 0) throw FormatError("zero denominator in " + s);
    return Rational(std::stoll(s.substr(0, slash)), den);
  } catch (const std::logic_error&) {
    throw FormatError("bad rational: " + s);
  }
}

}  // namespace

Json fixture_to_json(const Fixture& f) {
  Json j;
  j["schema"] = 1;
  j["name"] = f.name;
  j["labels"] = f.labels;
  j["profile"] = profile_to_json(f.profile);
  Json sets = Json::array();
  for (const auto& ws : f.weight_sets) {
    Json rows = Json::array();
    for (const auto& row : ws.weights) {
      Json r = Json::array();
      for (const Rational& v : row) r.push_back(rational_text(v));
      rows.push_back(std::move(r));
    }
    sets.push_back({{"name", ws.name}, {"weights", std::move(rows)}});
  }
  j["weight_sets"] = std::move(sets);
  Json ms = Json::array();
  for (const auto& nm : f.matchings) {
    Json m = matching_to_json(nm.matching);
    ms.push_back({{"name", nm.name}, {"n", m["n"]}, {"edges", m["edges"]}});
  }
  j["matchings"] = std::move(ms);
  Json qs = Json::array();
  for (const auto& q : f.quantities) {
    qs.push_back({{"name", q.name},
                  {"value", rational_text(q.value)},
                  {"expected", rational_text(q.expected)},
                  {"relation", q.relation == Relation::Equal ? "eq" : "ge"},
                  {"provenance", q.provenance == Provenance::Published ? "published" : "derived"},
                  {"holds", q.holds()}});
  }
  j["quantities"] = std::move(qs);
  Json cs = Json::array();
  for (const auto& c : f.checks) cs.push_back({{"name", c.name}, {"passed", c.passed}});
  j["checks"] = std::move(cs);
  j["verified"] = f.verified();
  return j;
}

Fixture fixture_from_json(const Json& j) {
  try {
    if (j.at("schema").get<int>() != 1) throw FormatError("unsupported fixture schema");
    Fixture f{j.at("name").get<std::string>(), j.at("labels").get<std::vector<std::string>>(),
              profile_from_json(j.at("profile")), {}, {}, {}, {}};
    for (const auto& ws : j.at("weight_sets")) {
      RationalMatrix w;
      for (const auto& row : ws.at("weights")) {
        std::vector<Rational> r;
        for (const auto& v : row) r.push_back(parse_rational(v));
        w.push_back(std::move(r));
      }
      to_instance(w);  // throws MalformedInstance on a bad matrix
      if (static_cast<int>(w.size()) != f.profile.size()) throw FormatError("weight set size differs from profile");
      f.weight_sets.push_back({ws.at("name").get<std::string>(), std::move(w)});
    }
    for (const auto& m : j.at("matchings"))
      f.matchings.push_back({m.at("name").get<std::string>(), matching_from_json(m)});
    for (const auto& qj : j.at("quantities")) {
      FixtureQuantity q{qj.at("name").get<std::string>(), parse_rational(qj.at("value")),
                        parse_rational(qj.at("expected")),
                        qj.at("relation").get<std::string>() == "eq" ? Relation::Equal : Relation::AtLeast,
                        qj.at("provenance").get<std::string>() == "published" ? Provenance::Published
                                                                              : Provenance::Derived};
      if (q.holds() != qj.at("holds").get<bool>()) throw FormatError("stored verdict disagrees for " + q.name);
      f.quantities.push_back(std::move(q));
    }
    for (const auto& c : j.at("checks")) f.checks.push_back({c.at("name").get<std::string>(), c.at("passed").get<bool>()});
    if (f.verified() != j.at("verified").get<bool>()) throw FormatError("stored fixture verdict disagrees");
    return f;
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(std::string("malformed fixture: ") + e.what());
  }
}

}  // namespace ordmatch

#pragma once

#include <string>
#include <vector>

#include <boost/rational.hpp>

#include "ordmatch/instance.hpp"
#include "ordmatch/io.hpp"
#include "ordmatch/matching.hpp"

// Lower-bound instances with their arithmetic carried out in exact rationals.

namespace ordmatch {

using Rational = boost::rational<long long>;
using RationalMatrix = std::vector<std::vector<Rational>>;

enum class Provenance { Published, Derived };
enum class Relation { Equal, AtLeast };

struct FixtureWeights {
  std::string name;
  RationalMatrix weights;
};

struct FixtureQuantity {
  std::string name;
  Rational value;
  Rational expected;
  Relation relation = Relation::Equal;
  Provenance provenance = Provenance::Published;

  bool holds() const { return relation == Relation::Equal ? value == expected : value >= expected; }
};

struct FixtureCheck {
  std::string name;
  bool passed = false;
};

struct NamedMatching {
  std::string name;
  Matching matching;
};

struct Fixture {
  std::string name;
  std::vector<std::string> labels;
  PreferenceProfile profile;
  std::vector<FixtureWeights> weight_sets;
  std::vector<NamedMatching> matchings;
  std::vector<FixtureQuantity> quantities;
  std::vector<FixtureCheck> checks;

  bool verified() const;
  const FixtureQuantity& quantity(const std::string& name) const;
};

/// Exact weight of a matching under rational weights.
Rational matching_value(const Matching& m, const RationalMatrix& w);
/// Exact maximum over matchings with at most k edges (memoized exhaustive
/// search; intended for fixtures of at most 20 nodes).
Rational exact_opt_matching(const RationalMatrix& w, int k);
WeightedInstance to_instance(const RationalMatrix& w);

/// Four agents a..d with one published profile and two consistent weight
/// sets: W1 (all 1, w(c,d)=eps) and W2 (all 1, w(a,b)=2). Records the best
/// deterministic worst-case ratio 3/2 and, in the eps -> 0 limit, the optimal
/// mixture x = 2/5 on M1 with worst-case ratio 5/4.
Fixture build_fixture_claim22(Rational eps = Rational(1, 100));

/// 2n agents in n mutual-top pairs; the adversary picks one pair uniformly.
/// Metric variant: that pair weighs 2, all else 1. Non-metric variant: that
/// pair weighs 1, all else eps. Records the expected k-matching weight,
/// OPT and ratio, plus the eps -> 0 ratio (n/k) for the non-metric variant.
Fixture build_fixture_kmatching_lb(int n, bool metric, int k = 1, Rational eps = Rational(1, 100));

/// Eight agents ranked by tiers (a_i, b_i share rank i), six candidate
/// matchings and four weight sets (the first three break the triangle
/// inequality, the fourth does not). Records each set's OPT and
/// value vector, and the bound c <= 3/5 obtained by summing the four
/// inequalities A(W) >= c * OPT(W).
Fixture build_fixture_53();

Json fixture_to_json(const Fixture& f);
/// Rebuilds a fixture and re-checks that every stored `holds` flag matches
/// its recomputed value. Throws FormatError on any mismatch.
Fixture fixture_from_json(const Json& j);

}  // namespace ordmatch

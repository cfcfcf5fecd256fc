#include <doctest.h>

#include <cstdio>
#include <filesystem>

#include "ordmatch/error.hpp"
#include "ordmatch/io.hpp"
#include "ordmatch/ordinal.hpp"
#include "support/generators.hpp"

using namespace ordmatch;

TEST_SUITE("io") {

TEST_CASE("instances round-trip") {
  for (std::uint64_t seed = 0; seed < 6; ++seed) {
    const auto inst = testsupport::random_metric(7, seed);
    const Json j = instance_to_json(inst);
    CHECK(j["n"] == 7);
    CHECK(j["weights"].size() == 7);
    const auto back = instance_from_json(Json::parse(j.dump()));
    CHECK(back == inst);
  }
  const auto plain = testsupport::random_weights(5, 1);
  const auto back = instance_from_json(instance_to_json(plain));
  CHECK(back == plain);
  CHECK_FALSE(back.metric());
}

TEST_CASE("instance loader validation") {
  CHECK(instance_from_json(Json::parse(R"({"n": 2, "weights": [0, 3, 3, 0]})")).weight(0, 1) == 3.0);
  CHECK_THROWS_AS(instance_from_json(Json::parse(R"({"n": 2, "weights": [[0, 3], [4, 0]]})")), MalformedInstance);
  CHECK_THROWS_AS(instance_from_json(Json::parse(R"({"n": 3, "weights": [[0, 3], [3, 0]]})")), FormatError);
  CHECK_THROWS_AS(instance_from_json(Json::parse(R"({"weights": [[0, 3], [3, 0]]})")), FormatError);
  CHECK_THROWS_AS(instance_from_json(Json::parse(R"({"n": 2, "weights": [[0, "x"], [3, 0]]})")), FormatError);
  CHECK_THROWS_AS(instance_from_json(Json::parse(R"({"n": 2, "weights": 5})")), FormatError);
  // A metric flag that the weights contradict.
  CHECK_THROWS_AS(
      instance_from_json(Json::parse(R"({"n": 3, "weights": [[0,5,1],[5,0,1],[1,1,0]], "metric": true})")),
      MalformedInstance);
  const auto ok = instance_from_json(Json::parse(R"({"n": 3, "weights": [[0,5,1],[5,0,1],[1,1,0]], "metric": false})"));
  CHECK_FALSE(ok.metric());
  CHECK_THROWS_AS(instance_from_json(Json::parse(R"({"n": 2, "weights": [0,1,1,0], "meta": {"family": "x", "seed": 1}})")),
                  ParameterError);
}

TEST_CASE("profiles and solutions round-trip") {
  const auto prefs = derive_preferences(testsupport::random_metric(6, 2));
  CHECK(profile_from_json(profile_to_json(prefs)) == prefs);
  CHECK_THROWS_AS(profile_from_json(Json::parse(R"({"n": 3, "ranking": [[1, 2], [0, 2]]})")), FormatError);
  CHECK_THROWS_AS(profile_from_json(Json::parse(R"({"n": 3, "ranking": [[1, 1], [0, 2], [0, 1]]})")), ParameterError);

  const Matching m(6, {{4, 1}, {0, 3}});
  const Json mj = matching_to_json(m);
  CHECK(mj.dump() == R"({"n":6,"edges":[[1,4],[0,3]]})");
  CHECK(matching_from_json(mj) == m);
  CHECK_THROWS_AS(matching_from_json(Json::parse(R"({"n": 4, "edges": [[0, 1, 2]]})")), FormatError);
  CHECK_THROWS_AS(matching_from_json(Json::parse(R"({"n": 4, "edges": [[0, 1], [1, 2]]})")), ParameterError);

  const Clustering c{4, {{0, 2}, {1, 3}}};
  CHECK(clustering_from_json(clustering_to_json(c)) == c);
  CHECK_THROWS_AS(clustering_from_json(Json::parse(R"({"n": 4, "parts": [[0, 1], [1, 2]]})")), ParameterError);
  const Subset s{5, {0, 4}};
  CHECK(subset_from_json(subset_to_json(s)) == s);
  CHECK_THROWS_AS(subset_from_json(Json::parse(R"({"n": 2, "nodes": [3]})")), FormatError);
  const Tour t{4, {0, 2, 1, 3}};
  CHECK(tour_from_json(tour_to_json(t)) == t);
  CHECK_THROWS_AS(tour_from_json(Json::parse(R"({"n": 3, "order": [0, 1]})")), ParameterError);
  CHECK(path_to_json(Path{4, {1, 2}})["order"].size() == 2);
}

TEST_CASE("files") {
  const auto path = (std::filesystem::temp_directory_path() / "ordmatch_io_test.json").string();
  const auto inst = testsupport::random_metric(5, 4);
  write_text_file(path, instance_to_json(inst).dump(2));
  CHECK(instance_from_json(read_json_file(path)) == inst);
  write_text_file(path, "{ not json");
  CHECK_THROWS_AS(read_json_file(path), FormatError);
  std::remove(path.c_str());
  CHECK_THROWS_AS(read_json_file(path), FormatError);
}

}  // TEST_SUITE

#include "ordmatch/io.hpp"

#include <fstream>
#include <sstream>

#include "ordmatch/error.hpp"

namespace ordmatch {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw FormatError(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

int read_n(const Json& j) {
  const Json& n = field(j, "n");
  if (!n.is_number_integer() || n.get<long long>() < 0) throw FormatError("\"n\" must be a nonnegative integer");
  return n.get<int>();
}

template <class T>
T as(const Json& j, const char* what) {
  try {
    return j.get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(std::string("bad ") + what + ": " + e.what());
  }
}

}  // namespace

Json instance_to_json(const WeightedInstance& inst) {
  Json j;
  j["n"] = inst.size();
  j["weights"] = inst.rows();
  j["metric"] = inst.metric();
  if (inst.points()) j["points"] = *inst.points();
  if (inst.meta()) {
    j["meta"] = {{"family", std::string(family_name(inst.meta()->family))}, {"seed", inst.meta()->seed}};
  }
  return j;
}

WeightedInstance instance_from_json(const Json& j) {
  const int n = read_n(j);
  const Json& w = field(j, "weights");
  if (!w.is_array()) throw FormatError("\"weights\" must be an array");

  std::vector<double> flat;
  if (!w.empty() && w.front().is_array()) {
    const auto rows = as<std::vector<std::vector<double>>>(w, "weights");
    if (static_cast<int>(rows.size()) != n) throw FormatError("\"weights\" row count differs from n");
    for (const auto& r : rows) {
      if (static_cast<int>(r.size()) != n) throw FormatError("\"weights\" row length differs from n");
      flat.insert(flat.end(), r.begin(), r.end());
    }
  } else {
    flat = as<std::vector<double>>(w, "weights");
  }
  WeightedInstance inst(n, std::move(flat));

  if (j.contains("points")) inst.set_points(as<std::vector<std::vector<double>>>(j.at("points"), "points"));
  if (j.contains("meta")) {
    const Json& m = j.at("meta");
    inst.set_meta({parse_family(as<std::string>(field(m, "family"), "meta.family")),
                   as<std::uint64_t>(field(m, "seed"), "meta.seed")});
  }
  const bool claims_metric = j.contains("metric") && as<bool>(j.at("metric"), "metric");
  if (claims_metric && !validate_metric(inst, default_metric_tolerance(inst)))
    throw MalformedInstance("instance is flagged metric but violates the triangle inequality");
  return inst;
}

Json profile_to_json(const PreferenceProfile& p) {
  Json j;
  j["n"] = p.size();
  j["ranking"] = p.rankings();
  return j;
}

PreferenceProfile profile_from_json(const Json& j) {
  const int n = read_n(j);
  auto ranking = as<std::vector<std::vector<Node>>>(field(j, "ranking"), "ranking");
  if (static_cast<int>(ranking.size()) != n) throw FormatError("\"ranking\" length differs from n");
  return PreferenceProfile(std::move(ranking));
}

Json matching_to_json(const Matching& m) {
  Json j;
  j["n"] = m.ambient_size();
  Json edges = Json::array();
  for (const Edge& e : m.edges()) edges.push_back({e.u, e.v});
  j["edges"] = std::move(edges);
  return j;
}

Matching matching_from_json(const Json& j) {
  Matching m(read_n(j));
  for (const auto& pair : as<std::vector<std::vector<Node>>>(field(j, "edges"), "edges")) {
    if (pair.size() != 2) throw FormatError("each edge must be a [u, v] pair");
    m.add({pair[0], pair[1]});
  }
  return m;
}

Json clustering_to_json(const Clustering& c) {
  Json j;
  j["n"] = c.n;
  j["parts"] = c.parts;
  return j;
}

Clustering clustering_from_json(const Json& j) {
  Clustering c{read_n(j), as<std::vector<std::vector<Node>>>(field(j, "parts"), "parts")};
  check_clustering(c);
  return c;
}

Json subset_to_json(const Subset& s) {
  Json j;
  j["n"] = s.n;
  j["nodes"] = s.nodes;
  return j;
}

Subset subset_from_json(const Json& j) {
  Subset s{read_n(j), as<std::vector<Node>>(field(j, "nodes"), "nodes")};
  for (Node x : s.nodes)
    if (x < 0 || x >= s.n) throw FormatError("subset node out of range");
  return s;
}

Json tour_to_json(const Tour& t) {
  Json j;
  j["n"] = t.n;
  j["order"] = t.order;
  return j;
}

Tour tour_from_json(const Json& j) {
  Tour t{read_n(j), as<std::vector<Node>>(field(j, "order"), "order")};
  check_tour(t);
  return t;
}

Json path_to_json(const Path& p) {
  Json j;
  j["n"] = p.n;
  j["order"] = p.order;
  return j;
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw FormatError(path + ": " + e.what());
  }
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw FormatError("cannot write " + path);
  out << text;
}

}  // namespace ordmatch

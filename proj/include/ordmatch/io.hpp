#pragma once

#include <string>

#include "json.hpp"
#include "ordmatch/instance.hpp"
#include "ordmatch/matching.hpp"
#include "ordmatch/reductions.hpp"

// JSON forms of instances, profiles and solutions. Loaders validate their
// input and throw FormatError (shape problems) or MalformedInstance.

namespace ordmatch {

using Json = nlohmann::ordered_json;

/// { "n", "weights": [[...]], "metric", "points"?, "meta"? }
Json instance_to_json(const WeightedInstance& inst);
/// Re-checks symmetry and well-formedness. A file claiming "metric": true is
/// re-validated at 1e-9 relative tolerance and rejected if the check fails.
WeightedInstance instance_from_json(const Json& j);

/// { "n", "ranking": [[...]] }
Json profile_to_json(const PreferenceProfile& p);
PreferenceProfile profile_from_json(const Json& j);

/// { "n", "edges": [[u, v], ...] }
Json matching_to_json(const Matching& m);
Matching matching_from_json(const Json& j);

/// { "n", "parts": [[...]] }
Json clustering_to_json(const Clustering& c);
Clustering clustering_from_json(const Json& j);

/// { "n", "nodes": [...] }
Json subset_to_json(const Subset& s);
Subset subset_from_json(const Json& j);

/// { "n", "order": [...] }
Json tour_to_json(const Tour& t);
Tour tour_from_json(const Json& j);
Json path_to_json(const Path& p);

Json read_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace ordmatch

#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "minksum/family.hpp"

namespace minksum {

using Json = nlohmann::ordered_json;

/// Parses {"r": 4, "sets": [[1,2,3],[1,2,4]]}. Elements are 1-based and must
/// be strictly increasing within each set; duplicate sets are allowed.
SimplexFamily family_from_json(const Json& j);
SimplexFamily family_from_string(const std::string& text);
SimplexFamily family_from_file(const std::string& path);

Json family_to_json(const SimplexFamily& fam);

/// {"family": ..., "vertex_count": N, "vertices": [[...], ...]} with
/// lexicographically sorted rows.
Json vertex_list_json(const SimplexFamily& fam, const std::vector<LatticePoint>& verts);

}  // namespace minksum

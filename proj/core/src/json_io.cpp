#include "minksum/json_io.hpp"

#include <fstream>

namespace minksum {

SimplexFamily family_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("r") || !j.contains("sets"))
        throw DomainError("family JSON must be an object with \"r\" and \"sets\"");
    if (!j["r"].is_number_integer())
        throw DomainError("family JSON field \"r\" must be an integer");
    const int r = j["r"].get<int>();
    if (!j["sets"].is_array() || j["sets"].empty())
        throw DomainError("family JSON field \"sets\" must be a nonempty array");
    std::vector<GroundSet> sets;
    for (const auto& js : j["sets"]) {
        if (!js.is_array()) throw DomainError("each set must be an array of integers");
        GroundSet s;
        for (const auto& je : js) {
            if (!je.is_number_integer()) throw DomainError("set elements must be integers");
            s.push_back(je.get<int>());
        }
        sets.push_back(std::move(s));
    }
    return SimplexFamily(r, std::move(sets));
}

SimplexFamily family_from_string(const std::string& text) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw DomainError(std::string("malformed JSON: ") + e.what());
    }
    return family_from_json(j);
}

SimplexFamily family_from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DomainError("cannot open family file: " + path);
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return family_from_string(text);
}

Json family_to_json(const SimplexFamily& fam) {
    Json j;
    j["r"] = fam.ground_size();
    j["sets"] = Json::array();
    for (const auto& s : fam.sets()) j["sets"].push_back(s);
    return j;
}

Json vertex_list_json(const SimplexFamily& fam, const std::vector<LatticePoint>& verts) {
    Json j;
    j["family"] = family_to_json(fam);
    j["vertex_count"] = verts.size();
    j["vertices"] = Json::array();
    for (const auto& v : verts) j["vertices"].push_back(v);
    return j;
}

}  // namespace minksum

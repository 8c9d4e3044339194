#include "tilesub/json_io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace tilesub {

using nlohmann::json;

std::string provenance_name(Provenance p) {
    switch (p) {
        case Provenance::Original: return "original";
        case Provenance::EdgeMidpoint: return "midpoint";
        case Provenance::FaceCenter: return "center";
    }
    return "";
}

namespace {

template <class T, class F>
json rekeyed(const GMap& canon, const std::vector<Dart>& perm, int dim, const std::map<Dart, T>& m, F value) {
    auto idx = cell_index(canon, dim);
    json out = json::object();
    for (auto& [d, v] : m) out[std::to_string(idx[perm[d]])] = value(v);
    return out;
}

std::vector<Dart> int_array(const json& j, const char* key) {
    if (!j.contains(key) || !j[key].is_array()) throw JsonInputError(std::string("missing integer array ") + key);
    std::vector<Dart> v;
    for (const json& x : j[key]) {
        if (!x.is_number_integer()) throw JsonInputError(std::string("non-integer entry in ") + key);
        v.push_back(x.get<Dart>());
    }
    return v;
}

Dart dart_key(const std::string& k, int n) {
    size_t used = 0;
    int d = -1;
    try {
        d = std::stoi(k, &used);
    } catch (const std::exception&) {
    }
    if (used != k.size() || d < 0 || d >= n) throw JsonInputError("label key out of range: " + k);
    return d;
}

}  // namespace

std::string to_gmap_json(const GMap& g, const Labels& labels) {
    std::vector<Dart> perm;
    GMap c = canonical_form(g, &perm);
    json j;
    j["format"] = "gmap2-v1";
    j["darts"] = c.size();
    j["alpha0"] = c.alpha(0);
    j["alpha1"] = c.alpha(1);
    j["alpha2"] = c.alpha(2);
    if (!labels.empty()) {
        json l = json::object();
        if (!labels.vertex_marks.empty())
            l["vertex_marks"] = rekeyed(c, perm, 0, labels.vertex_marks,
                                        [](Mark m) { return m == Mark::Filled ? "filled" : "hollow"; });
        if (!labels.provenance.empty())
            l["provenance"] = rekeyed(c, perm, 0, labels.provenance, [](Provenance p) { return provenance_name(p); });
        if (!labels.assignment.empty())
            l["assignment"] = rekeyed(c, perm, 2, labels.assignment, [](int b) { return b; });
        j["labels"] = l;
    }
    return j.dump();
}

MapWithLabels from_gmap_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw JsonInputError(std::string("malformed JSON: ") + e.what(), static_cast<long long>(e.byte));
    }
    if (!j.is_object()) throw JsonInputError("top level must be an object");
    if (!j.contains("format") || j["format"] != "gmap2-v1") throw JsonInputError("format must be gmap2-v1");
    auto a0 = int_array(j, "alpha0"), a1 = int_array(j, "alpha1"), a2 = int_array(j, "alpha2");
    if (j.contains("darts") && (!j["darts"].is_number_integer() || j["darts"].get<long long>() != static_cast<long long>(a0.size())))
        throw JsonInputError("darts does not match alpha0 length");
    MapWithLabels out;
    out.map = GMap::build(a0, a1, a2);
    int n = out.map.size();
    if (j.contains("labels")) {
        const json& l = j["labels"];
        if (!l.is_object()) throw JsonInputError("labels must be an object");
        if (l.contains("vertex_marks"))
            for (auto& [k, v] : l["vertex_marks"].items()) {
                if (v == "filled") out.labels.vertex_marks[dart_key(k, n)] = Mark::Filled;
                else if (v == "hollow") out.labels.vertex_marks[dart_key(k, n)] = Mark::Hollow;
                else throw JsonInputError("vertex mark must be filled or hollow");
            }
        if (l.contains("provenance"))
            for (auto& [k, v] : l["provenance"].items()) {
                Provenance p;
                if (v == "original") p = Provenance::Original;
                else if (v == "midpoint") p = Provenance::EdgeMidpoint;
                else if (v == "center") p = Provenance::FaceCenter;
                else throw JsonInputError("unknown provenance");
                out.labels.provenance[dart_key(k, n)] = p;
            }
        if (l.contains("assignment"))
            for (auto& [k, v] : l["assignment"].items()) {
                if (v != 0 && v != 1) throw JsonInputError("assignment values must be 0 or 1");
                out.labels.assignment[dart_key(k, n)] = v.get<int>();
            }
    }
    return out;
}

MapWithLabels read_gmap_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw JsonInputError("cannot read " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return from_gmap_json(ss.str());
}

}  // namespace tilesub

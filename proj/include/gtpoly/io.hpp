#pragma once

// JSON encodings for the value types. Needs nlohmann/json on the include
// path.

#include "gtpoly/core.hpp"
#include "gtpoly/spec.hpp"
#include "gtpoly/tiling.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>
#include <string>

namespace gtpoly::io {

using Json = nlohmann::ordered_json;

/// Integers are emitted as numbers, everything else as "p/q".
inline Json to_json(const Rational& q) {
    if (is_integer(q)) {
        Integer z = numerator(q);
        if (z <= INT64_MAX && z >= INT64_MIN) return z.convert_to<std::int64_t>();
    }
    return to_string(q);
}

inline Rational rational_from_json(const Json& j) {
    if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
    if (j.is_string()) return parse_rational(j.get<std::string>());
    throw MalformedInput("expected an integer or a \"p/q\" string, got " + j.dump());
}

inline std::vector<std::int64_t> ints_from_json(const Json& j) {
    if (!j.is_array()) throw MalformedInput("expected an array of integers, got " + j.dump());
    std::vector<std::int64_t> out;
    for (const auto& v : j) {
        if (!v.is_number_integer()) throw MalformedInput("expected an integer, got " + v.dump());
        out.push_back(v.get<std::int64_t>());
    }
    return out;
}

inline Json to_json(const Partition& p) { return p.parts(); }
inline Json to_json(const Composition& c) { return c.parts(); }

inline Json to_json(const SkewShape& s) {
    Json j;
    j["lambda"] = Partition(s.lambda()).parts();
    j["mu"] = Partition(s.mu()).parts();
    return j;
}

inline SkewShape shape_from_json(const Json& j) {
    if (j.is_array()) return SkewShape(Partition(ints_from_json(j)));
    if (!j.is_object() || !j.contains("lambda")) throw MalformedInput("shape needs a \"lambda\" field");
    Partition lam(ints_from_json(j.at("lambda")));
    Partition mu = j.contains("mu") ? Partition(ints_from_json(j.at("mu"))) : Partition{};
    return SkewShape(lam, mu);
}

/// Rows bottom first.
inline Json to_json(const GTPattern& p) {
    Json rows = Json::array();
    for (const auto& r : p.rows()) {
        Json row = Json::array();
        for (const auto& v : r) row.push_back(to_json(v));
        rows.push_back(row);
    }
    return rows;
}

inline GTPattern pattern_from_json(const Json& j) {
    if (!j.is_array() || j.empty()) throw MalformedInput("pattern must be a non-empty array of rows");
    std::vector<std::vector<Rational>> rows;
    for (const auto& r : j) {
        if (!r.is_array()) throw MalformedInput("pattern row must be an array");
        std::vector<Rational> row;
        for (const auto& v : r) row.push_back(rational_from_json(v));
        rows.push_back(std::move(row));
    }
    return GTPattern(std::move(rows));
}

inline Json to_json(const SkewTableau& t) {
    Json j;
    j["shape"] = to_json(t.shape());
    j["rows"] = t.rows();
    return j;
}

inline SkewTableau tableau_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("shape") || !j.contains("rows")) throw MalformedInput("tableau needs shape and rows");
    std::vector<std::vector<int>> rows;
    for (const auto& r : j.at("rows")) {
        std::vector<int> row;
        for (auto v : ints_from_json(r)) row.push_back(static_cast<int>(v));
        rows.push_back(std::move(row));
    }
    return SkewTableau(shape_from_json(j.at("shape")), std::move(rows));
}

inline Json to_json(const Tiling& t, bool with_matrix = true) {
    Json tiles = Json::array();
    for (const auto& tile : t.tiles) {
        Json cells = Json::array();
        for (auto [i, jj] : tile.cells) cells.push_back({i + 1, jj + 1});
        tiles.push_back({{"content", to_json(tile.content)}, {"fixed", tile.fixed}, {"cells", cells}});
    }
    Json out;
    out["tiles"] = tiles;
    if (with_matrix) {
        Json mat = Json::array();
        for (const auto& row : tiling_matrix(t)) {
            Json r = Json::array();
            for (const auto& v : row) r.push_back(v.convert_to<std::int64_t>());
            mat.push_back(r);
        }
        out["matrix"] = mat;
    }
    return out;
}

inline Json read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw MalformedInput("cannot open " + path);
    try {
        return Json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw MalformedInput(path + ": " + e.what());
    }
}

}  // namespace gtpoly::io

#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "alexdual/face.hpp"
#include "alexdual/simplicial_complex.hpp"

namespace alexdual {

class parse_error : public std::runtime_error {
public:
    explicit parse_error(const std::string& message) : std::runtime_error(message) {}
};

/**
 * Canonical document form of a complex: {"n":N,"facets":[[...],...]} with
 * facets in lexicographic order, no whitespace, stable across runs.
 * Serialization is injective on canonical complexes.
 */
inline std::string serialize_complex(const SimplicialComplex& x) {
    std::string out = "{\"n\":" + std::to_string(x.ground_set_size()) + ",\"facets\":[";
    bool first_facet = true;
    for (Face f : x.facets()) {
        if (!first_facet) out += ',';
        out += '[';
        bool first_vertex = true;
        for (Vertex v : f.vertices()) {
            if (!first_vertex) out += ',';
            out += std::to_string(v);
            first_vertex = false;
        }
        out += ']';
        first_facet = false;
    }
    out += "]}";
    return out;
}

/**
 * Parses a complex document. Keys: "n" (integer >= 0), "facets" (list of
 * vertex lists), optional "name" (string). Facet lists are canonicalized:
 * vertices sorted and deduplicated silently, non-maximal facets dropped with
 * a warning appended to *warnings (when given). Vertices outside 1..n, n < 0,
 * unknown keys, and malformed syntax raise parse_error with a position.
 */
inline SimplicialComplex parse_complex(std::string_view text,
                                       std::vector<std::string>* warnings = nullptr) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw parse_error("complex document: " + std::string(e.what()));
    }
    if (!doc.is_object())
        throw parse_error("complex document: expected a JSON object");
    for (const auto& item : doc.items()) {
        const std::string& key = item.key();
        if (key != "n" && key != "facets" && key != "name")
            throw parse_error("complex document: unknown key \"" + key + "\"");
    }
    if (!doc.contains("n") || !doc["n"].is_number_integer())
        throw parse_error("complex document: missing integer key \"n\"");
    if (!doc.contains("facets") || !doc["facets"].is_array())
        throw parse_error("complex document: missing array key \"facets\"");
    if (doc.contains("name") && !doc["name"].is_string())
        throw parse_error("complex document: \"name\" must be a string");

    const std::int64_t n = doc["n"].get<std::int64_t>();
    if (n < 0)
        throw parse_error("complex document: n must be >= 0, got " + std::to_string(n));
    if (n > kMaxGroundSetSize)
        throw parse_error("complex document: n exceeds supported maximum " +
                          std::to_string(kMaxGroundSetSize));

    std::vector<Face> facets;
    for (const auto& entry : doc["facets"]) {
        if (!entry.is_array())
            throw parse_error("complex document: each facet must be a list of vertices");
        Face f;
        for (const auto& vertex : entry) {
            if (!vertex.is_number_integer())
                throw parse_error("complex document: vertices must be integers");
            const std::int64_t v = vertex.get<std::int64_t>();
            if (v < 1 || v > n)
                throw parse_error("complex document: vertex " + std::to_string(v) +
                                  " out of range 1.." + std::to_string(n));
            f = f.with(static_cast<Vertex>(v));
        }
        facets.push_back(f);
    }

    const SimplicialComplex x = SimplicialComplex::from_facets(static_cast<int>(n), facets);
    if (warnings) {
        const auto& kept = x.facets();
        for (Face f : facets)
            if (std::find(kept.begin(), kept.end(), f) == kept.end())
                warnings->push_back("dropped non-maximal facet " + to_string(f));
    }
    return x;
}

}  // namespace alexdual

#pragma once

#include <c4star/polgraph.hpp>

#include <json.hpp>

#include <optional>

namespace c4star {

/**
 * Graph interchange format:
 *
 *   { "q": 3, "i": 0, "k": 0,
 *     "classes": [[[kx, ky], ...], ...],
 *     "edges":   [[[kx, ky], [kx, ky]], ...] }
 *
 * A label is the pair of ordering keys of a plane point, or (class,
 * position) for generated graphs. q, i and k are present only for
 * G(q,i,k).
 */
auto to_json(const MultipartiteGraph & g, const std::optional<ConstructionParams> & params = std::nullopt) -> nlohmann::json;

struct ParsedGraph
{
    MultipartiteGraph graph;
    std::optional<ConstructionParams> params;
};

/// Throws InvalidGraph on schema violations, unknown labels or intra-class edges.
auto graph_from_json(const nlohmann::json & doc) -> ParsedGraph;

} // namespace c4star

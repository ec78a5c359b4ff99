#include <c4star/graph_json.hpp>

#include <c4star/errors.hpp>

namespace c4star {

namespace {

    auto label_json(VertexLabel l) -> nlohmann::json
    {
        return nlohmann::json::array({l.x, l.y});
    }

    auto parse_label(const nlohmann::json & j) -> VertexLabel
    {
        if (! j.is_array() || j.size() != 2 || ! j[0].is_number_integer() || ! j[1].is_number_integer())
            throw InvalidGraph("a vertex label must be a pair of integers, got " + j.dump());
        return {j[0].get<int>(), j[1].get<int>()};
    }

} // namespace

auto to_json(const MultipartiteGraph & g, const std::optional<ConstructionParams> & params) -> nlohmann::json
{
    nlohmann::json doc = nlohmann::json::object();
    if (params) {
        doc["q"] = params->q;
        doc["i"] = params->i;
        doc["k"] = params->k;
    }
    auto classes = nlohmann::json::array();
    for (int j = 0; j < g.class_count(); ++j) {
        auto members = nlohmann::json::array();
        for (int v : g.class_members(j))
            members.push_back(label_json(g.label(v)));
        classes.push_back(std::move(members));
    }
    doc["classes"] = std::move(classes);
    auto edges = nlohmann::json::array();
    for (auto [u, v] : g.graph().edges())
        edges.push_back(nlohmann::json::array({label_json(g.label(u)), label_json(g.label(v))}));
    doc["edges"] = std::move(edges);
    return doc;
}

auto graph_from_json(const nlohmann::json & doc) -> ParsedGraph
{
    if (! doc.is_object() || ! doc.contains("classes") || ! doc.contains("edges"))
        throw InvalidGraph("graph document needs \"classes\" and \"edges\"");
    const auto & classes_json = doc.at("classes");
    const auto & edges_json = doc.at("edges");
    if (! classes_json.is_array() || ! edges_json.is_array())
        throw InvalidGraph("\"classes\" and \"edges\" must be arrays");

    std::vector<std::vector<VertexLabel>> classes;
    for (const auto & cls : classes_json) {
        if (! cls.is_array())
            throw InvalidGraph("each class must be an array of labels");
        std::vector<VertexLabel> members;
        for (const auto & l : cls)
            members.push_back(parse_label(l));
        classes.push_back(std::move(members));
    }

    ParsedGraph parsed{MultipartiteGraph(classes), std::nullopt};
    for (const auto & e : edges_json) {
        if (! e.is_array() || e.size() != 2)
            throw InvalidGraph("an edge must be a pair of labels, got " + e.dump());
        auto a = parse_label(e[0]), b = parse_label(e[1]);
        if (! parsed.graph.graph().contains(a) || ! parsed.graph.graph().contains(b))
            throw InvalidGraph("edge " + e.dump() + " uses an unknown vertex");
        parsed.graph.add_edge(a, b);
    }

    if (doc.contains("q") && doc.contains("i") && doc.contains("k"))
        parsed.params = ConstructionParams{doc.at("q").get<int>(), doc.at("i").get<int>(), doc.at("k").get<int>()};
    return parsed;
}

} // namespace c4star

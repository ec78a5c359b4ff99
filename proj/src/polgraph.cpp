#include <c4star/polgraph.hpp>

#include <c4star/errors.hpp>

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace c4star {

Graph::Graph(std::vector<VertexLabel> labels) :
    labels_(std::move(labels)),
    adj_(labels_.size(), DynamicBitset(labels_.size()))
{
    for (std::size_t v = 0; v < labels_.size(); ++v)
        if (! index_.emplace(labels_[v], static_cast<int>(v)).second)
            throw InvalidGraph("duplicate vertex " + to_string(labels_[v]));
}

auto Graph::index_of(VertexLabel l) const -> int
{
    auto it = index_.find(l);
    if (it == index_.end())
        throw std::out_of_range("unknown vertex " + to_string(l));
    return it->second;
}

auto Graph::add_edge(int u, int v) -> void
{
    if (u == v)
        throw InvalidGraph("self-loop at " + to_string(label(u)));
    adj_.at(static_cast<std::size_t>(u)).set(static_cast<std::size_t>(v));
    adj_.at(static_cast<std::size_t>(v)).set(static_cast<std::size_t>(u));
}

auto Graph::edge_count() const -> int
{
    int total = 0;
    for (const auto & row : adj_)
        total += static_cast<int>(row.count());
    return total / 2;
}

auto Graph::edges() const -> std::vector<std::pair<int, int>>
{
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < size(); ++u)
        neighbors(u).for_each([&](std::size_t v) {
            if (static_cast<int>(v) > u)
                out.emplace_back(u, static_cast<int>(v));
        });
    return out;
}

MultipartiteGraph::MultipartiteGraph(const std::vector<std::vector<VertexLabel>> & classes)
{
    std::vector<VertexLabel> labels;
    for (std::size_t j = 0; j < classes.size(); ++j) {
        std::vector<int> members;
        for (auto l : classes[j]) {
            members.push_back(static_cast<int>(labels.size()));
            class_of_.push_back(static_cast<int>(j));
            labels.push_back(l);
        }
        classes_.push_back(std::move(members));
    }
    graph_ = Graph(std::move(labels));
}

auto MultipartiteGraph::add_edge(int u, int v) -> void
{
    if (class_of(u) == class_of(v))
        throw InvalidGraph("edge " + to_string(label(u)) + " - " + to_string(label(v)) + " lies inside a class");
    graph_.add_edge(u, v);
}

auto MultipartiteGraph::induced(const std::function<bool(VertexLabel)> & keep) const -> MultipartiteGraph
{
    std::vector<std::vector<VertexLabel>> kept;
    for (const auto & cls : classes_) {
        std::vector<VertexLabel> members;
        for (int v : cls)
            if (keep(label(v)))
                members.push_back(label(v));
        if (! members.empty())
            kept.push_back(std::move(members));
    }
    MultipartiteGraph sub(kept);
    for (auto [u, v] : graph_.edges()) {
        auto a = label(u), b = label(v);
        if (sub.graph_.contains(a) && sub.graph_.contains(b))
            sub.add_edge(a, b);
    }
    return sub;
}

auto MultipartiteGraph::adjacency_matrix() const -> std::string
{
    std::ostringstream out;
    for (int u = 0; u < size(); ++u) {
        for (int v = 0; v < size(); ++v)
            out << (v > 0 ? " " : "") << (adjacent(u, v) ? 1 : 0);
        out << '\n';
    }
    return out.str();
}

auto ConstructionParams::validate() const -> void
{
    if (! is_prime_power(q))
        throw NotPrimePower(q);
    if (i < 0 || i > q - 1)
        throw InvalidParams("i must satisfy 0 <= i <= q-1, got i = " + std::to_string(i));
    if (k < 0 || k > q - 2)
        throw InvalidParams("k must satisfy 0 <= k <= q-2, got k = " + std::to_string(k));
}

auto polarity_graph(const ProjectivePlane & plane) -> Graph
{
    Graph g(plane.points());
    for (int u = 0; u < plane.size(); ++u)
        plane.incidence().rows[static_cast<std::size_t>(u)].for_each([&](std::size_t v) {
            if (static_cast<int>(v) > u)
                g.add_edge(u, static_cast<int>(v));
        });
    return g;
}

auto polarity_graph(int q) -> Graph
{
    return polarity_graph(ProjectivePlane(q));
}

auto construct(const ProjectivePlane & plane, const ConstructionParams & params) -> MultipartiteGraph
{
    params.validate();
    if (params.q != plane.order())
        throw InvalidParams("plane order does not match q");
    int q = params.q;

    // Construction A. The class of a vertex is its x key.
    std::vector<std::vector<VertexLabel>> classes(static_cast<std::size_t>(q + 1));
    for (auto p : plane.points())
        if (p != plane.infinity())
            classes[static_cast<std::size_t>(p.x)].push_back(p);
    MultipartiteGraph base(classes);
    for (int u = 0; u < base.size(); ++u)
        for (int v = u + 1; v < base.size(); ++v)
            if (base.class_of(u) != base.class_of(v) && plane.incident(base.label(u), base.label(v)))
                base.add_edge(u, v);

    if (params.i == 0 && params.k == 0)
        return base;

    std::vector<bool> removed(static_cast<std::size_t>(base.size()), false);
    for (int l = 1; l <= params.k; ++l) {
        int center = base.index_of({0, q - l});
        removed[static_cast<std::size_t>(center)] = true;
        base.graph().neighbors(center).for_each([&](std::size_t v) { removed[v] = true; });
    }
    int last_class = q - params.i;
    return base.induced([&](VertexLabel p) {
        return p.x <= last_class && ! removed[static_cast<std::size_t>(base.index_of(p))];
    });
}

auto construct(const ConstructionParams & params) -> MultipartiteGraph
{
    params.validate();
    return construct(ProjectivePlane(params.q), params);
}

auto frame(const MultipartiteGraph & g) -> Frame
{
    Frame f;
    int min_size = 0;
    for (int j = 0; j < g.class_count(); ++j) {
        int size = static_cast<int>(g.class_members(j).size());
        if (size == 0)
            continue;
        min_size = f.classes == 0 ? size : std::min(min_size, size);
        f.max_size = std::max(f.max_size, size);
        ++f.classes;
    }
    f.balanced = f.classes > 0 && min_size == f.max_size;
    return f;
}

auto common_neighbors(const Graph & g, VertexLabel a, VertexLabel b) -> std::vector<VertexLabel>
{
    if (a == b)
        throw SameVertex();
    auto shared = g.neighbors(g.index_of(a));
    shared.intersect_with(g.neighbors(g.index_of(b)));
    std::vector<VertexLabel> out;
    shared.for_each([&](std::size_t v) { out.push_back(g.label(static_cast<int>(v))); });
    return out;
}

auto c4_free(const Graph & g) -> bool
{
    for (int u = 0; u < g.size(); ++u)
        for (int v = u + 1; v < g.size(); ++v)
            if (g.neighbors(u).intersection_count(g.neighbors(v)) > 1)
                return false;
    return true;
}

auto cherry_count(const Graph & g) -> long long
{
    long long total = 0;
    for (int v = 0; v < g.size(); ++v) {
        long long d = g.degree(v);
        total += d * (d - 1) / 2;
    }
    return total;
}

auto cherry_bound(const Graph & g) -> bool
{
    long long n = g.size();
    return cherry_count(g) <= n * (n - 1) / 2;
}

auto degree_stats(const MultipartiteGraph & g, int c, int s) -> DegreeStats
{
    auto f = frame(g);
    if (f.classes > c || f.max_size > s)
        throw FrameTooSmall("graph with " + std::to_string(f.classes) + " classes of size up to "
                            + std::to_string(f.max_size) + " does not fit K_{" + std::to_string(c) + "x"
                            + std::to_string(s) + "}");
    DegreeStats stats;
    for (int v = 0; v < g.size(); ++v) {
        stats.degree.push_back(g.degree(v));
        stats.complement.push_back((c - 1) * s - g.degree(v));
    }
    if (! stats.degree.empty()) {
        auto [lo, hi] = std::minmax_element(stats.degree.begin(), stats.degree.end());
        stats.min_degree = *lo;
        stats.max_degree = *hi;
        auto [clo, chi] = std::minmax_element(stats.complement.begin(), stats.complement.end());
        stats.min_complement = *clo;
        stats.max_complement = *chi;
    }
    return stats;
}

} // namespace c4star

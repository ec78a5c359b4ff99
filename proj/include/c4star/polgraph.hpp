#pragma once

#include <c4star/bitset.hpp>
#include <c4star/plane.hpp>

#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace c4star {

/// Vertices are identified by a pair of integers: a plane point for the
/// polarity-graph constructions, (class, position) for generated graphs.
using VertexLabel = PointLabel;

/// Simple undirected graph with labelled vertices and bitset adjacency.
class Graph
{
public:
    Graph() = default;
    explicit Graph(std::vector<VertexLabel> labels);

    auto size() const -> int { return static_cast<int>(labels_.size()); }
    auto label(int v) const -> VertexLabel { return labels_.at(static_cast<std::size_t>(v)); }
    auto labels() const -> const std::vector<VertexLabel> & { return labels_; }
    auto contains(VertexLabel l) const -> bool { return index_.contains(l); }
    /// Throws std::out_of_range for an unknown label.
    auto index_of(VertexLabel l) const -> int;

    /// Throws InvalidGraph on a self-loop.
    auto add_edge(int u, int v) -> void;
    auto adjacent(int u, int v) const -> bool { return adj_[static_cast<std::size_t>(u)].test(static_cast<std::size_t>(v)); }
    auto neighbors(int v) const -> const DynamicBitset & { return adj_[static_cast<std::size_t>(v)]; }
    auto degree(int v) const -> int { return static_cast<int>(adj_[static_cast<std::size_t>(v)].count()); }
    auto edge_count() const -> int;
    /// Edges (u, v) with u < v, lexicographic.
    auto edges() const -> std::vector<std::pair<int, int>>;

private:
    std::vector<VertexLabel> labels_;
    std::map<VertexLabel, int> index_;
    std::vector<DynamicBitset> adj_;
};

/**
 * Graph whose vertices are partitioned into ordered classes V_0..V_{c-1},
 * with no edge inside a class. Vertex ids run through the classes in order.
 */
class MultipartiteGraph
{
public:
    MultipartiteGraph() = default;
    explicit MultipartiteGraph(const std::vector<std::vector<VertexLabel>> & classes);

    auto graph() const -> const Graph & { return graph_; }
    auto size() const -> int { return graph_.size(); }
    auto class_count() const -> int { return static_cast<int>(classes_.size()); }
    auto class_members(int j) const -> const std::vector<int> & { return classes_.at(static_cast<std::size_t>(j)); }
    auto class_of(int v) const -> int { return class_of_.at(static_cast<std::size_t>(v)); }

    auto label(int v) const -> VertexLabel { return graph_.label(v); }
    auto index_of(VertexLabel l) const -> int { return graph_.index_of(l); }
    auto degree(int v) const -> int { return graph_.degree(v); }
    auto adjacent(int u, int v) const -> bool { return graph_.adjacent(u, v); }
    auto edge_count() const -> int { return graph_.edge_count(); }

    /// Throws InvalidGraph for an edge inside a class.
    auto add_edge(int u, int v) -> void;
    auto add_edge(VertexLabel a, VertexLabel b) -> void { add_edge(index_of(a), index_of(b)); }

    /// Induced subgraph on the kept vertices; classes left empty are dropped.
    auto induced(const std::function<bool(VertexLabel)> & keep) const -> MultipartiteGraph;

    /// Rows of space separated 0/1 in vertex order.
    auto adjacency_matrix() const -> std::string;

private:
    Graph graph_;
    std::vector<std::vector<int>> classes_;
    std::vector<int> class_of_;
};

/// Parameters (q, i, k) of G(q,i,k).
struct ConstructionParams
{
    int q = 0;
    int i = 0;
    int k = 0;

    /// Throws NotPrimePower or InvalidParams unless 0 <= i <= q-1, 0 <= k <= q-2.
    auto validate() const -> void;
    /// i = 0 with k > 1: the construction leaves V_q larger than the other classes.
    auto unbalanced_case() const -> bool { return i == 0 && k > 1; }
};

/// The polarity graph G_q: P ~ Q iff P != Q and P lies on B_Q.
auto polarity_graph(const ProjectivePlane & plane) -> Graph;
auto polarity_graph(int q) -> Graph;

/**
 * G(q,i,k). G(q,0,0) is G_q minus (q,q), split into V_0 = {0} x F_q,
 * V_j = {alpha^j} x F_q and V_q = {q} x F_q, keeping only edges between
 * distinct classes. G(q,i,0) keeps V_0..V_{q-i}; for k >= 1 the closed
 * neighbourhoods in G(q,0,0) of (0, alpha^(q-l)), l = 1..k, are removed.
 */
auto construct(const ProjectivePlane & plane, const ConstructionParams & params) -> MultipartiteGraph;
auto construct(const ConstructionParams & params) -> MultipartiteGraph;

struct Frame
{
    int classes = 0;  ///< nonempty classes
    int max_size = 0; ///< largest class
    bool balanced = false;

    auto operator==(const Frame &) const -> bool = default;
};

auto frame(const MultipartiteGraph & g) -> Frame;

/// Throws SameVertex when a == b.
auto common_neighbors(const Graph & g, VertexLabel a, VertexLabel b) -> std::vector<VertexLabel>;

/// Every pair of distinct vertices has at most one common neighbour.
auto c4_free(const Graph & g) -> bool;

/// sum_v C(deg v, 2) <= C(|V|, 2).
auto cherry_bound(const Graph & g) -> bool;
auto cherry_count(const Graph & g) -> long long;

struct DegreeStats
{
    std::vector<int> degree;
    std::vector<int> complement; ///< (c-1)s - deg(v)
    int min_degree = 0;
    int max_degree = 0;
    int min_complement = 0;
    int max_complement = 0;
};

/// Degrees inside g and in its complement relative to K_{c x s}.
/// Throws FrameTooSmall if g does not fit the frame.
auto degree_stats(const MultipartiteGraph & g, int c, int s) -> DegreeStats;

} // namespace c4star

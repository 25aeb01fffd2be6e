#pragma once

#include <rrlab/vertex_set.hpp>

#include <functional>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace rrlab
{
    using Edge = std::pair<Vertex, Vertex>;

    class GraphBuilder;

    /// Immutable simple undirected graph on vertices 0..order()-1. Each row of
    /// the adjacency relation is a VertexSet, so neighbourhood intersections
    /// are word operations.
    class Graph
    {
    public:
        Graph() = default;

        /// Builds from an edge list, rejecting self-loops, duplicates and
        /// out-of-range endpoints.
        static auto from_edges(int order, std::span<const Edge> edges) -> Graph;
        static auto from_edges(int order, std::initializer_list<Edge> edges) -> Graph
        {
            return from_edges(order, std::span<const Edge>{edges.begin(), edges.size()});
        }

        auto order() const -> int { return _order; }
        auto edge_count() const -> std::size_t;
        auto adjacent(Vertex u, Vertex v) const -> bool { return _rows[static_cast<std::size_t>(u)].contains(v); }
        auto neighbours(Vertex v) const -> const VertexSet & { return _rows[static_cast<std::size_t>(v)]; }
        auto degree(Vertex v) const -> int { return neighbours(v).size(); }
        auto vertices() const -> VertexSet { return VertexSet::full(_order); }
        auto no_vertices() const -> VertexSet { return VertexSet(_order); }
        /// Edges (u, v) with u < v, sorted lexicographically.
        auto edges() const -> std::vector<Edge>;

        auto operator==(const Graph & other) const -> bool = default;

    private:
        friend class GraphBuilder;
        int _order = 0;
        std::vector<VertexSet> _rows;
    };

    class GraphBuilder
    {
    public:
        explicit GraphBuilder(int order);
        explicit GraphBuilder(const Graph & start);

        auto order() const -> int { return _graph._order; }
        auto has_edge(Vertex u, Vertex v) const -> bool { return _graph.adjacent(u, v); }
        auto add_edge(Vertex u, Vertex v) -> GraphBuilder &;
        auto remove_edge(Vertex u, Vertex v) -> GraphBuilder &;
        auto build() && -> Graph { return std::move(_graph); }
        auto build() const & -> Graph { return _graph; }

    private:
        void check_pair(Vertex u, Vertex v) const;
        Graph _graph;
    };

    /// An induced subgraph together with the map from its vertices back to
    /// the parent's vertex ids.
    struct InducedSubgraph
    {
        Graph graph;
        std::vector<Vertex> parent;

        auto lift(Vertex v) const -> Vertex { return parent[static_cast<std::size_t>(v)]; }
        auto lift(const VertexSet & s, int parent_order) const -> VertexSet;
        auto lift(std::span<const Vertex> seq) const -> std::vector<Vertex>;
    };

    /// Chordless path v0..vk; length() counts edges.
    struct Path
    {
        std::vector<Vertex> vertices;

        auto length() const -> int { return static_cast<int>(vertices.size()) - 1; }
        auto front() const -> Vertex { return vertices.front(); }
        auto back() const -> Vertex { return vertices.back(); }
        auto vertex_set(int order) const -> VertexSet { return VertexSet(order, vertices); }
        auto operator==(const Path &) const -> bool = default;
    };

    /// Sequence that is a chordless path in the complement of its host graph.
    struct Antipath
    {
        std::vector<Vertex> vertices;

        auto length() const -> int { return static_cast<int>(vertices.size()) - 1; }
        auto operator==(const Antipath &) const -> bool = default;
    };

    auto complement(const Graph & g) -> Graph;
    auto induced_subgraph(const Graph & g, const VertexSet & s) -> InducedSubgraph;
    auto components(const Graph & g, const VertexSet & s) -> std::vector<VertexSet>;
    auto is_connected(const Graph & g, const VertexSet & s) -> bool;

    /// True iff the complement of g[s] is connected. Throws InputError on
    /// the empty set, whose anticonnectedness is left undefined.
    auto is_anticonnected(const Graph & g, const VertexSet & s) -> bool;
    auto is_stable(const Graph & g, const VertexSet & s) -> bool;
    auto is_clique(const Graph & g, const VertexSet & s) -> bool;

    /// C(T): vertices outside t adjacent to every member of t.
    auto complete_set(const Graph & g, const VertexSet & t) -> VertexSet;

    /// Vertices that are distinct, consecutive ones adjacent and the others not.
    auto is_chordless_path(const Graph & g, std::span<const Vertex> seq) -> bool;
    auto is_antipath(const Graph & g, std::span<const Vertex> seq) -> bool;

    /// Shortest a-b path avoiding `forbidden`; shortest paths are chordless.
    auto find_chordless_path(const Graph & g, Vertex a, Vertex b, const VertexSet & forbidden)
        -> std::optional<Path>;

    /// Depth-first enumeration of chordless a-b paths whose vertices all lie
    /// in `allowed` (a and b must be allowed). The visitor returns false to
    /// stop; the function returns false iff the visitor stopped it. Paths are
    /// produced in lexicographic order of their vertex sequences.
    auto for_each_chordless_path(const Graph & g, Vertex a, Vertex b, const VertexSet & allowed,
        const std::function<bool(std::span<const Vertex>)> & visit) -> bool;

    auto enumerate_chordless_paths(const Graph & g, Vertex a, Vertex b) -> std::vector<Path>;
}

#include <rrlab/graph.hpp>
#include <rrlab/errors.hpp>

#include <algorithm>
#include <deque>
#include <string>

namespace rrlab
{
    auto Graph::from_edges(int order, std::span<const Edge> edges) -> Graph
    {
        GraphBuilder builder(order);
        for (auto [u, v] : edges) {
            if (u >= 0 && v >= 0 && u < order && v < order && u != v && builder.has_edge(u, v))
                throw InputError("duplicate edge " + std::to_string(u) + " " + std::to_string(v));
            builder.add_edge(u, v);
        }
        return std::move(builder).build();
    }

    auto Graph::edge_count() const -> std::size_t
    {
        std::size_t twice = 0;
        for (auto & row : _rows)
            twice += static_cast<std::size_t>(row.size());
        return twice / 2;
    }

    auto Graph::edges() const -> std::vector<Edge>
    {
        std::vector<Edge> result;
        for (Vertex u = 0; u < _order; ++u)
            for (auto v : _rows[static_cast<std::size_t>(u)])
                if (v > u)
                    result.emplace_back(u, v);
        return result;
    }

    GraphBuilder::GraphBuilder(int order)
    {
        if (order < 0)
            throw InputError("negative vertex count");
        _graph._order = order;
        _graph._rows.assign(static_cast<std::size_t>(order), VertexSet(order));
    }

    GraphBuilder::GraphBuilder(const Graph & start) :
        _graph(start)
    {
    }

    void GraphBuilder::check_pair(Vertex u, Vertex v) const
    {
        if (u < 0 || v < 0 || u >= _graph._order || v >= _graph._order)
            throw InputError("edge " + std::to_string(u) + " " + std::to_string(v) + " has an endpoint out of range [0,"
                + std::to_string(_graph._order) + ")");
        if (u == v)
            throw InputError("self-loop on vertex " + std::to_string(u));
    }

    auto GraphBuilder::add_edge(Vertex u, Vertex v) -> GraphBuilder &
    {
        check_pair(u, v);
        _graph._rows[static_cast<std::size_t>(u)].insert(v);
        _graph._rows[static_cast<std::size_t>(v)].insert(u);
        return *this;
    }

    auto GraphBuilder::remove_edge(Vertex u, Vertex v) -> GraphBuilder &
    {
        check_pair(u, v);
        _graph._rows[static_cast<std::size_t>(u)].erase(v);
        _graph._rows[static_cast<std::size_t>(v)].erase(u);
        return *this;
    }

    auto InducedSubgraph::lift(const VertexSet & s, int parent_order) const -> VertexSet
    {
        VertexSet result(parent_order);
        for (auto v : s)
            result.insert(lift(v));
        return result;
    }

    auto InducedSubgraph::lift(std::span<const Vertex> seq) const -> std::vector<Vertex>
    {
        std::vector<Vertex> result;
        result.reserve(seq.size());
        for (auto v : seq)
            result.push_back(lift(v));
        return result;
    }

    auto complement(const Graph & g) -> Graph
    {
        GraphBuilder builder(g.order());
        for (Vertex u = 0; u < g.order(); ++u)
            for (Vertex v = u + 1; v < g.order(); ++v)
                if (! g.adjacent(u, v))
                    builder.add_edge(u, v);
        return std::move(builder).build();
    }

    auto induced_subgraph(const Graph & g, const VertexSet & s) -> InducedSubgraph
    {
        if (s.universe() != g.order())
            throw InputError("vertex set universe does not match graph order");
        InducedSubgraph result;
        result.parent = s.to_vector();
        std::vector<Vertex> local(static_cast<std::size_t>(g.order()), -1);
        for (std::size_t i = 0; i < result.parent.size(); ++i)
            local[static_cast<std::size_t>(result.parent[i])] = static_cast<Vertex>(i);

        GraphBuilder builder(static_cast<int>(result.parent.size()));
        for (std::size_t i = 0; i < result.parent.size(); ++i)
            for (auto w : g.neighbours(result.parent[i]) & s)
                if (local[static_cast<std::size_t>(w)] > static_cast<Vertex>(i))
                    builder.add_edge(static_cast<Vertex>(i), local[static_cast<std::size_t>(w)]);
        result.graph = std::move(builder).build();
        return result;
    }

    auto components(const Graph & g, const VertexSet & s) -> std::vector<VertexSet>
    {
        std::vector<VertexSet> result;
        auto unseen = s;
        while (! unseen.empty()) {
            VertexSet component(g.order());
            auto frontier = VertexSet(g.order(), {unseen.first()});
            while (! frontier.empty()) {
                component |= frontier;
                unseen -= frontier;
                VertexSet grown(g.order());
                for (auto v : frontier)
                    grown |= g.neighbours(v);
                frontier = grown & unseen;
            }
            result.push_back(std::move(component));
        }
        return result;
    }

    auto is_connected(const Graph & g, const VertexSet & s) -> bool
    {
        return components(g, s).size() <= 1;
    }

    auto is_anticonnected(const Graph & g, const VertexSet & s) -> bool
    {
        if (s.empty())
            throw InputError("anticonnectedness of the empty set is undefined");
        // Search in the complement of g[s] without materialising it.
        auto unseen = s;
        auto frontier = VertexSet(g.order(), {s.first()});
        while (! frontier.empty()) {
            unseen -= frontier;
            VertexSet grown(g.order());
            for (auto v : frontier)
                grown |= unseen - g.neighbours(v);
            frontier = grown;
        }
        return unseen.empty();
    }

    auto is_stable(const Graph & g, const VertexSet & s) -> bool
    {
        for (auto v : s)
            if (g.neighbours(v).intersects(s))
                return false;
        return true;
    }

    auto is_clique(const Graph & g, const VertexSet & s) -> bool
    {
        for (auto v : s)
            if (! (s.without(v)).is_subset_of(g.neighbours(v)))
                return false;
        return true;
    }

    auto complete_set(const Graph & g, const VertexSet & t) -> VertexSet
    {
        auto result = g.vertices() - t;
        for (auto v : t)
            result &= g.neighbours(v);
        return result;
    }

    namespace
    {
        auto is_path_in(const Graph & g, std::span<const Vertex> seq, bool in_complement) -> bool
        {
            if (seq.empty())
                return false;
            for (auto v : seq)
                if (v < 0 || v >= g.order())
                    return false;
            for (std::size_t i = 0; i < seq.size(); ++i)
                for (std::size_t j = i + 1; j < seq.size(); ++j) {
                    if (seq[i] == seq[j])
                        return false;
                    bool edge = g.adjacent(seq[i], seq[j]) != in_complement;
                    if (edge != (j == i + 1))
                        return false;
                }
            return true;
        }
    }

    auto is_chordless_path(const Graph & g, std::span<const Vertex> seq) -> bool
    {
        return is_path_in(g, seq, false);
    }

    auto is_antipath(const Graph & g, std::span<const Vertex> seq) -> bool
    {
        return is_path_in(g, seq, true);
    }

    auto find_chordless_path(const Graph & g, Vertex a, Vertex b, const VertexSet & forbidden)
        -> std::optional<Path>
    {
        if (a < 0 || b < 0 || a >= g.order() || b >= g.order())
            throw InputError("path endpoint out of range");
        if (forbidden.contains(a) || forbidden.contains(b))
            throw InputError("path endpoint lies in the forbidden set");
        if (a == b)
            return Path{{a}};

        std::vector<Vertex> previous(static_cast<std::size_t>(g.order()), -1);
        auto unseen = g.vertices() - forbidden;
        unseen.erase(a);
        std::deque<Vertex> queue{a};
        while (! queue.empty()) {
            auto v = queue.front();
            queue.pop_front();
            for (auto w : g.neighbours(v) & unseen) {
                unseen.erase(w);
                previous[static_cast<std::size_t>(w)] = v;
                if (w == b) {
                    Path path;
                    for (auto at = b; at != -1; at = previous[static_cast<std::size_t>(at)])
                        path.vertices.push_back(at);
                    std::reverse(path.vertices.begin(), path.vertices.end());
                    if (! is_chordless_path(g, path.vertices))
                        throw InvariantViolation("breadth-first path is not chordless");
                    return path;
                }
                queue.push_back(w);
            }
        }
        return std::nullopt;
    }

    namespace
    {
        struct PathSearch
        {
            const Graph & g;
            Vertex target;
            const std::function<bool(std::span<const Vertex>)> & visit;
            std::vector<Vertex> path;

            // `available`: vertices that may still extend the path, i.e. allowed,
            // unused, and not adjacent to any path vertex except the current end.
            auto extend(const VertexSet & available) -> bool
            {
                auto end = path.back();
                for (auto w : g.neighbours(end) & available) {
                    path.push_back(w);
                    if (w == target) {
                        if (! visit(path))
                            return false;
                    }
                    else {
                        auto next_available = available - g.neighbours(end);
                        next_available.erase(w);
                        // The target must stay reachable as an extension.
                        if (next_available.contains(target) && ! extend(next_available))
                            return false;
                    }
                    path.pop_back();
                }
                return true;
            }
        };
    }

    auto for_each_chordless_path(const Graph & g, Vertex a, Vertex b, const VertexSet & allowed,
        const std::function<bool(std::span<const Vertex>)> & visit) -> bool
    {
        if (a < 0 || b < 0 || a >= g.order() || b >= g.order())
            throw InputError("path endpoint out of range");
        if (a == b)
            throw InputError("chordless path enumeration needs distinct endpoints");
        if (! allowed.contains(a) || ! allowed.contains(b))
            return true;
        PathSearch search{g, b, visit, {a}};
        return search.extend(allowed.without(a));
    }

    auto enumerate_chordless_paths(const Graph & g, Vertex a, Vertex b) -> std::vector<Path>
    {
        std::vector<Path> result;
        for_each_chordless_path(g, a, b, g.vertices(), [&](std::span<const Vertex> seq) {
            result.push_back(Path{{seq.begin(), seq.end()}});
            return true;
        });
        return result;
    }
}

#include <rrlab/pairs_coloring.hpp>
#include <rrlab/decomposition.hpp>
#include <rrlab/errors.hpp>
#include <rrlab/lemma_lab.hpp>
#include <rrlab/recognition.hpp>

#include <algorithm>
#include <sstream>

namespace rrlab
{
    namespace
    {
        void check_pair(const Graph & g, Vertex a, Vertex b)
        {
            if (a < 0 || b < 0 || a >= g.order() || b >= g.order())
                throw InputError("pair vertex out of range");
            if (a == b)
                throw InputError("pair vertices must differ");
        }

        template <typename Accept>
        auto all_chordless_paths(const Graph & g, Vertex a, Vertex b, Accept accept) -> bool
        {
            check_pair(g, a, b);
            return for_each_chordless_path(
                g, a, b, g.vertices(), [&](std::span<const Vertex> seq) { return accept(static_cast<int>(seq.size()) - 1); });
        }

        auto describe_witness(const char * what, const ClassCertificate & cert) -> std::string
        {
            std::ostringstream out;
            out << "graph is not " << what << ", witness=" << witness_name(*cert.witness);
            for (auto v : witness_vertices(*cert.witness))
                out << ' ' << v;
            return out.str();
        }

        auto cross_component_pair(const Graph & g) -> std::pair<Vertex, Vertex>
        {
            auto parts = components(g, g.vertices());
            return {parts[0].first(), parts[1].first()};
        }

        auto two_pair_in(const Graph & g) -> std::optional<TwoPair>
        {
            if (is_complete(g))
                return std::nullopt;
            auto p3 = find_induced_p3(g);
            if (! p3) {
                auto [a, b] = cross_component_pair(g);
                return TwoPair{a, b};
            }
            auto t = grow_maximal_T(g, VertexSet(g.order(), {p3->center}));
            auto inner = induced_subgraph(g, complete_set(g, t));
            auto found = two_pair_in(inner.graph);
            if (! found)
                throw InvariantViolation("C(T) is a clique for maximal T=" + t.to_string());
            return TwoPair{inner.lift(found->a), inner.lift(found->b)};
        }

        auto even_pair_in(const Graph & g) -> std::optional<EvenPair>
        {
            if (is_complete(g))
                return std::nullopt;
            auto p3 = find_induced_p3(g);
            if (! p3) {
                auto [a, b] = cross_component_pair(g);
                return EvenPair{a, b};
            }
            auto inner = induced_subgraph(g, g.neighbours(p3->center));
            auto found = even_pair_in(inner.graph);
            if (! found)
                throw InvariantViolation("neighbourhood of a P3 center is a clique");
            return EvenPair{inner.lift(found->a), inner.lift(found->b)};
        }

        auto verified_two_pair(const Graph & g) -> std::optional<TwoPair>
        {
            auto found = two_pair_in(g);
            if (found && ! verify_two_pair(g, found->a, found->b))
                throw InvariantViolation("extracted pair (" + std::to_string(found->a) + "," + std::to_string(found->b)
                    + ") is not a 2-pair");
            return found;
        }
    }

    auto verify_two_pair(const Graph & g, Vertex a, Vertex b) -> bool
    {
        return all_chordless_paths(g, a, b, [](int length) { return length == 2; });
    }

    auto verify_even_pair(const Graph & g, Vertex a, Vertex b) -> bool
    {
        return all_chordless_paths(g, a, b, [](int length) { return length % 2 == 0; });
    }

    auto find_two_pair(const Graph & g) -> std::optional<TwoPair>
    {
        if (auto cert = is_weakly_chordal(g); ! cert.verdict)
            throw InputError(describe_witness("weakly chordal", cert));
        return verified_two_pair(g);
    }

    auto find_even_pair_meyniel(const Graph & g) -> std::optional<EvenPair>
    {
        if (auto cert = is_meyniel(g); ! cert.verdict)
            throw InputError(describe_witness("Meyniel", cert));
        auto found = even_pair_in(g);
        if (found && ! verify_even_pair(g, found->a, found->b))
            throw InvariantViolation("extracted pair (" + std::to_string(found->a) + "," + std::to_string(found->b)
                + ") is not an even pair");
        return found;
    }

    auto contract_pair(const Graph & g, Vertex a, Vertex b) -> Contraction
    {
        check_pair(g, a, b);
        if (g.adjacent(a, b))
            throw InputError("cannot contract adjacent vertices " + std::to_string(a) + " and " + std::to_string(b));
        Contraction result;
        result.vertex_map.resize(static_cast<std::size_t>(g.order()));
        for (Vertex v = 0; v < g.order(); ++v)
            result.vertex_map[static_cast<std::size_t>(v)] = v - (v > b ? 1 : 0);
        result.vertex_map[static_cast<std::size_t>(b)] = result.vertex_map[static_cast<std::size_t>(a)];

        GraphBuilder builder(g.order() - 1);
        for (auto [u, v] : g.edges())
            builder.add_edge(result.vertex_map[static_cast<std::size_t>(u)], result.vertex_map[static_cast<std::size_t>(v)]);
        result.graph = std::move(builder).build();
        return result;
    }

    auto color_weakly_chordal(const Graph & g) -> Coloring
    {
        if (auto cert = is_weakly_chordal(g); ! cert.verdict)
            throw InputError(describe_witness("weakly chordal", cert));

        std::vector<std::vector<Vertex>> history;
        auto current = g;
        while (auto pair = verified_two_pair(current)) {
            auto step = contract_pair(current, pair->a, pair->b);
            if (auto cert = is_weakly_chordal(step.graph); ! cert.verdict)
                throw InvariantViolation("contracting a 2-pair left a non weakly chordal graph: "
                    + describe_witness("weakly chordal", cert));
            history.push_back(std::move(step.vertex_map));
            current = std::move(step.graph);
        }

        Coloring result;
        result.count = current.order();
        result.color.resize(static_cast<std::size_t>(g.order()));
        for (Vertex v = 0; v < g.order(); ++v) {
            auto at = v;
            for (auto & map : history)
                at = map[static_cast<std::size_t>(at)];
            result.color[static_cast<std::size_t>(v)] = at;
        }
        if (! is_proper_coloring(g, result))
            throw InvariantViolation("pulled-back coloring is not proper");
        return result;
    }

    auto is_proper_coloring(const Graph & g, const Coloring & c) -> bool
    {
        if (c.color.size() != static_cast<std::size_t>(g.order()))
            return false;
        for (auto color : c.color)
            if (color < 0 || color >= c.count)
                return false;
        for (auto [u, v] : g.edges())
            if (c.color[static_cast<std::size_t>(u)] == c.color[static_cast<std::size_t>(v)])
                return false;
        return true;
    }

    namespace
    {
        struct CliqueSearch
        {
            const Graph & g;
            int best = 0;

            void expand(int size, VertexSet candidates)
            {
                // Greedy coloring of the candidates bounds the clique they can add.
                std::vector<Vertex> order;
                std::vector<int> bound;
                auto uncolored = candidates;
                for (int color = 1; ! uncolored.empty(); ++color) {
                    auto available = uncolored;
                    while (! available.empty()) {
                        auto v = available.first();
                        available -= g.neighbours(v);
                        available.erase(v);
                        uncolored.erase(v);
                        order.push_back(v);
                        bound.push_back(color);
                    }
                }
                for (auto k = order.size(); k-- > 0;) {
                    if (size + bound[k] <= best)
                        return;
                    auto v = order[k];
                    auto next = candidates & g.neighbours(v);
                    if (next.empty())
                        best = std::max(best, size + 1);
                    else
                        expand(size + 1, next);
                    candidates.erase(v);
                }
            }
        };
    }

    auto max_clique_bruteforce(const Graph & g) -> int
    {
        CliqueSearch search{g};
        search.expand(0, g.vertices());
        return search.best;
    }
}

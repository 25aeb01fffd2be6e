#include <rrlab/recognition.hpp>
#include <rrlab/errors.hpp>

#include <algorithm>

namespace rrlab
{
    namespace
    {
        auto parity_matches(int length, Parity parity) -> bool
        {
            switch (parity) {
                case Parity::any: return true;
                case Parity::odd: return length % 2 == 1;
                case Parity::even: return length % 2 == 0;
            }
            return false;
        }

        auto is_hole_in(const Graph & g, std::span<const Vertex> cycle, bool in_complement) -> bool
        {
            auto k = cycle.size();
            if (k < 4)
                return false;
            for (auto v : cycle)
                if (v < 0 || v >= g.order())
                    return false;
            for (std::size_t i = 0; i < k; ++i)
                for (std::size_t j = i + 1; j < k; ++j) {
                    if (cycle[i] == cycle[j])
                        return false;
                    bool consecutive = (j == i + 1) || (i == 0 && j == k - 1);
                    bool edge = g.adjacent(cycle[i], cycle[j]) != in_complement;
                    if (edge != consecutive)
                        return false;
                }
            return true;
        }

        // Depth-first search for induced cycles whose smallest vertex is the
        // start of the path. `available` holds unused vertices above the start
        // with no neighbour among the path's interior vertices.
        struct HoleSearch
        {
            const Graph & g;
            int min_len;
            Parity parity;
            std::vector<Vertex> path;

            auto extend(const VertexSet & available) -> bool
            {
                if (static_cast<int>(path.size()) + available.size() < min_len)
                    return false;
                auto start = path.front();
                auto end = path.back();
                for (auto w : g.neighbours(end) & available) {
                    if (path.size() >= 2 && g.adjacent(w, start)) {
                        if (path.size() == 2)
                            continue;
                        int length = static_cast<int>(path.size()) + 1;
                        if (length >= min_len && parity_matches(length, parity)) {
                            path.push_back(w);
                            return true;
                        }
                        continue;
                    }
                    auto next = available.without(w);
                    if (path.size() >= 2)
                        next -= g.neighbours(end);
                    path.push_back(w);
                    if (extend(next))
                        return true;
                    path.pop_back();
                }
                return false;
            }
        };

        // Cycles (not necessarily induced) through their smallest vertex with
        // at most one chord. `extra` counts non-path edges among path vertices.
        struct FewChordCycleSearch
        {
            const Graph & g;
            std::vector<Vertex> path;
            VertexSet on_path;
            std::optional<ChordedCycle> found;

            auto extend(const VertexSet & available, int extra) -> bool
            {
                auto start = path.front();
                auto end = path.back();
                for (auto w : g.neighbours(end) & available) {
                    int added = (g.neighbours(w) & on_path).size() - 1;
                    int next_extra = extra + added;
                    bool closes = path.size() >= 2 && g.adjacent(w, start);
                    // Only an edge from the start to the final vertex can stop
                    // being a chord, so this bound is exact.
                    if (next_extra - (closes ? 1 : 0) >= 2)
                        continue;
                    path.push_back(w);
                    on_path.insert(w);
                    int length = static_cast<int>(path.size());
                    if (closes && length >= 5 && length % 2 == 1) {
                        found = ChordedCycle{path, next_extra - 1};
                        return true;
                    }
                    if (extend(available.without(w), next_extra))
                        return true;
                    on_path.erase(w);
                    path.pop_back();
                }
                return false;
            }
        };

        template <typename Witness>
        auto checked(const Graph & g, Witness w) -> ClassCertificate
        {
            ClassCertificate result{false, ClassWitness{std::move(w)}};
            if (! validate_witness(g, *result.witness))
                throw InvariantViolation("class witness " + witness_name(*result.witness) + " failed revalidation");
            return result;
        }
    }

    auto is_hole(const Graph & g, std::span<const Vertex> cycle) -> bool
    {
        return is_hole_in(g, cycle, false);
    }

    auto is_antihole(const Graph & g, std::span<const Vertex> cycle) -> bool
    {
        return is_hole_in(g, cycle, true);
    }

    auto cycle_chords(const Graph & g, std::span<const Vertex> cycle) -> std::optional<int>
    {
        auto k = cycle.size();
        if (k < 3)
            return std::nullopt;
        int chords = 0;
        for (std::size_t i = 0; i < k; ++i) {
            if (cycle[i] < 0 || cycle[i] >= g.order())
                return std::nullopt;
        }
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = i + 1; j < k; ++j) {
                if (cycle[i] == cycle[j])
                    return std::nullopt;
                bool consecutive = (j == i + 1) || (i == 0 && j == k - 1);
                bool edge = g.adjacent(cycle[i], cycle[j]);
                if (consecutive && ! edge)
                    return std::nullopt;
                if (! consecutive && edge)
                    ++chords;
            }
        return chords;
    }

    auto validate_witness(const Graph & g, const ClassWitness & w) -> bool
    {
        return std::visit(
            [&](const auto & x) -> bool {
                using T = std::decay_t<decltype(x)>;
                if constexpr (std::is_same_v<T, Hole>)
                    return is_hole(g, x.vertices);
                else if constexpr (std::is_same_v<T, Antihole>)
                    return is_antihole(g, x.vertices);
                else
                    return cycle_chords(g, x.vertices) == x.chords;
            },
            w);
    }

    auto witness_name(const ClassWitness & w) -> std::string
    {
        return std::visit(
            [](const auto & x) -> std::string {
                using T = std::decay_t<decltype(x)>;
                auto len = std::to_string(x.length());
                if constexpr (std::is_same_v<T, Hole>)
                    return "hole[" + len + "]";
                else if constexpr (std::is_same_v<T, Antihole>)
                    return "antihole[" + len + "]";
                else
                    return "odd-cycle[" + len + "]/chords=" + std::to_string(x.chords);
            },
            w);
    }

    auto witness_vertices(const ClassWitness & w) -> const std::vector<Vertex> &
    {
        return std::visit([](const auto & x) -> const std::vector<Vertex> & { return x.vertices; }, w);
    }

    auto find_hole(const Graph & g, int min_len, Parity parity) -> std::optional<Hole>
    {
        if (min_len < 4)
            throw InputError("hole length bound must be at least 4");
        for (Vertex start = 0; start < g.order(); ++start) {
            VertexSet above(g.order());
            for (Vertex v = start + 1; v < g.order(); ++v)
                above.insert(v);
            HoleSearch search{g, min_len, parity, {start}};
            if (search.extend(above))
                return Hole{std::move(search.path)};
        }
        return std::nullopt;
    }

    auto find_antihole(const Graph & g, int min_len, Parity parity) -> std::optional<Antihole>
    {
        if (auto hole = find_hole(complement(g), min_len, parity))
            return Antihole{std::move(hole->vertices)};
        return std::nullopt;
    }

    auto find_long_antihole(const Graph & g) -> std::optional<Antihole>
    {
        return find_antihole(g, 5, Parity::any);
    }

    auto is_weakly_chordal(const Graph & g) -> ClassCertificate
    {
        if (auto hole = find_hole(g, 5))
            return checked(g, std::move(*hole));
        if (auto antihole = find_long_antihole(g))
            return checked(g, std::move(*antihole));
        return {};
    }

    auto is_berge(const Graph & g) -> ClassCertificate
    {
        if (auto hole = find_hole(g, 5, Parity::odd))
            return checked(g, std::move(*hole));
        if (auto antihole = find_antihole(g, 5, Parity::odd))
            return checked(g, std::move(*antihole));
        return {};
    }

    auto is_odd_hole_free(const Graph & g) -> ClassCertificate
    {
        if (auto hole = find_hole(g, 5, Parity::odd))
            return checked(g, std::move(*hole));
        return {};
    }

    auto is_meyniel(const Graph & g) -> ClassCertificate
    {
        for (Vertex start = 0; start < g.order(); ++start) {
            VertexSet above(g.order());
            for (Vertex v = start + 1; v < g.order(); ++v)
                above.insert(v);
            FewChordCycleSearch search{g, {start}, VertexSet(g.order(), {start}), std::nullopt};
            if (search.extend(above, 0))
                return checked(g, std::move(*search.found));
        }
        return {};
    }

    auto is_complete(const Graph & g) -> bool
    {
        for (Vertex v = 0; v < g.order(); ++v)
            if (g.degree(v) != g.order() - 1)
                return false;
        return true;
    }

    auto is_complement_of_perfect_matching(const Graph & g) -> bool
    {
        if (g.order() < 2 || g.order() % 2 != 0)
            return false;
        for (Vertex v = 0; v < g.order(); ++v)
            if (g.degree(v) != g.order() - 2)
                return false;
        return true;
    }

    auto find_induced_p3(const Graph & g) -> std::optional<InducedP3>
    {
        for (Vertex center = 0; center < g.order(); ++center) {
            auto & nb = g.neighbours(center);
            for (auto a : nb) {
                auto others = nb - g.neighbours(a);
                others.erase(a);
                auto c = others.next(a);
                if (c != -1)
                    return InducedP3{a, center, c};
            }
        }
        return std::nullopt;
    }

    auto is_disjoint_union_of_cliques(const Graph & g) -> bool
    {
        return ! find_induced_p3(g).has_value();
    }
}

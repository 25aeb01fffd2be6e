#pragma once

#include <rrlab/graph.hpp>

#include <optional>
#include <vector>

namespace rrlab
{
    struct TwoPair
    {
        Vertex a = -1;
        Vertex b = -1;
    };

    struct EvenPair
    {
        Vertex a = -1;
        Vertex b = -1;
    };

    struct Coloring
    {
        std::vector<int> color;
        int count = 0;
    };

    /// Result of merging a non-adjacent pair: vertex_map sends every old
    /// vertex to its new id; b disappears into a.
    struct Contraction
    {
        Graph graph;
        std::vector<Vertex> vertex_map;
    };

    /// Every chordless a-b path has length 2 (vacuously true if none exist).
    auto verify_two_pair(const Graph & g, Vertex a, Vertex b) -> bool;
    /// Every chordless a-b path has even length (vacuously true if none).
    auto verify_even_pair(const Graph & g, Vertex a, Vertex b) -> bool;

    /// A 2-pair of a weakly chordal graph, obtained by recursing into C(T)
    /// for a maximal T; nullopt iff the graph is complete.
    auto find_two_pair(const Graph & g) -> std::optional<TwoPair>;

    /// An even pair of a Meyniel graph, obtained by recursing into the
    /// neighbourhood of the center of an induced P3; nullopt iff complete.
    auto find_even_pair_meyniel(const Graph & g) -> std::optional<EvenPair>;

    auto contract_pair(const Graph & g, Vertex a, Vertex b) -> Contraction;

    /// Contracts 2-pairs until the graph is a clique, then pulls the clique
    /// coloring back through the contraction history.
    auto color_weakly_chordal(const Graph & g) -> Coloring;
    auto is_proper_coloring(const Graph & g, const Coloring & c) -> bool;

    /// Exact clique number by branch and bound with a greedy-coloring bound.
    auto max_clique_bruteforce(const Graph & g) -> int;
}

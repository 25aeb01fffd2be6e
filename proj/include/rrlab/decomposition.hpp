#pragma once

#include <rrlab/graph.hpp>

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace rrlab
{
    /// Which case of the weakly chordal decomposition argument produced a cutset:
    /// i   the graph is a disjoint union of cliques with several components;
    /// ii  a star cutset of G[C(T)] extended by T;
    /// iii V = T u C(T), cutset built from T or from a star cutset of G[T];
    /// iv  a vertex outside T u C(T) exists.
    enum class CutsetBranch
    {
        i,
        ii,
        iii,
        iv,
        bruteforce
    };

    auto branch_name(CutsetBranch b) -> std::string;

    struct StarCutset
    {
        Vertex center = -1;
        VertexSet members;
        CutsetBranch branch = CutsetBranch::bruteforce;
    };

    auto verify_star_cutset(const Graph & g, const StarCutset & s) -> bool;

    /// Grows an anticonnected seed whose C(T) has a non-adjacent pair until
    /// no single vertex can be added: ascending scan, restarted after every
    /// addition. Throws InputError on an invalid seed.
    auto grow_maximal_T(const Graph & g, const VertexSet & seed) -> VertexSet;

    /// Star cutset of a weakly chordal graph, or nullopt when the graph is
    /// complete or the complement of a perfect matching. Non weakly chordal
    /// input raises InputError carrying the witness.
    auto find_star_cutset(const Graph & g) -> std::optional<StarCutset>;

    /// Exhaustive oracle: every center, every subset of its neighbourhood.
    auto star_cutset_exists_bruteforce(const Graph & g) -> std::optional<StarCutset>;

    struct DecompositionTree
    {
        enum class Kind
        {
            clique,
            co_matching,
            split
        };

        Kind kind = Kind::clique;
        /// Vertices of the block, in ids of the decomposed graph.
        VertexSet vertices;
        std::optional<StarCutset> cutset;
        std::vector<DecompositionTree> children;
    };

    /// Throws InputError on non weakly chordal input and InvariantViolation
    /// if a non-terminal block has no star cutset.
    auto decompose(const Graph & g) -> DecompositionTree;

    /// Re-checks every node independently: leaves against their predicate,
    /// splits as star cutsets of their block with one child per component.
    auto validate_tree(const Graph & g, const DecompositionTree & tree) -> bool;

    /// Indented text, one node per line:
    ///   SPLIT center=<id> S={...} branch=<i|ii|iii|iv>
    ///   LEAF clique {...}
    ///   LEAF co-matching {...}
    auto to_text(const DecompositionTree & tree) -> std::string;
}

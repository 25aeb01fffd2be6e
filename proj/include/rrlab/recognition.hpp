#pragma once

#include <rrlab/graph.hpp>

#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace rrlab
{
    /// Induced cycle v0..v(k-1), k >= 4, stored in cyclic order.
    struct Hole
    {
        std::vector<Vertex> vertices;

        auto length() const -> int { return static_cast<int>(vertices.size()); }
        auto operator==(const Hole &) const -> bool = default;
    };

    /// Cyclic sequence that is a hole in the complement.
    struct Antihole
    {
        std::vector<Vertex> vertices;

        auto length() const -> int { return static_cast<int>(vertices.size()); }
        auto operator==(const Antihole &) const -> bool = default;
    };

    /// A cycle (not necessarily induced) of the host graph together with the
    /// number of chords it has there.
    struct ChordedCycle
    {
        std::vector<Vertex> vertices;
        int chords = 0;

        auto length() const -> int { return static_cast<int>(vertices.size()); }
        auto operator==(const ChordedCycle &) const -> bool = default;
    };

    using ClassWitness = std::variant<Hole, Antihole, ChordedCycle>;

    struct ClassCertificate
    {
        bool verdict = true;
        std::optional<ClassWitness> witness;
    };

    enum class Parity
    {
        any,
        odd,
        even
    };

    auto is_hole(const Graph & g, std::span<const Vertex> cycle) -> bool;
    auto is_antihole(const Graph & g, std::span<const Vertex> cycle) -> bool;
    /// Cycle in g (consecutive and closing pairs adjacent, distinct, length
    /// >= 3); returns the chord count, or nullopt if it is not a cycle.
    auto cycle_chords(const Graph & g, std::span<const Vertex> cycle) -> std::optional<int>;

    /// Re-checks a witness against g; "hole[5]" style names come from
    /// witness_name().
    auto validate_witness(const Graph & g, const ClassWitness & w) -> bool;
    auto witness_name(const ClassWitness & w) -> std::string;
    auto witness_vertices(const ClassWitness & w) -> const std::vector<Vertex> &;

    /// Exhaustive hole search: a hole of length >= min_len with the given
    /// parity, or nullopt. Throws InputError when min_len < 4.
    auto find_hole(const Graph & g, int min_len = 4, Parity parity = Parity::any) -> std::optional<Hole>;
    auto find_antihole(const Graph & g, int min_len = 5, Parity parity = Parity::any) -> std::optional<Antihole>;
    auto find_long_antihole(const Graph & g) -> std::optional<Antihole>;

    auto is_weakly_chordal(const Graph & g) -> ClassCertificate;
    auto is_berge(const Graph & g) -> ClassCertificate;
    auto is_odd_hole_free(const Graph & g) -> ClassCertificate;
    /// Every odd cycle of length >= 5 has at least two chords.
    auto is_meyniel(const Graph & g) -> ClassCertificate;

    auto is_complete(const Graph & g) -> bool;
    auto is_complement_of_perfect_matching(const Graph & g) -> bool;
    /// No induced P3; equivalently every component is a clique.
    auto is_disjoint_union_of_cliques(const Graph & g) -> bool;

    /// First induced P3 (a, center, c) by ascending center, then ascending
    /// (a, c); nullopt when the graph is a disjoint union of cliques.
    struct InducedP3
    {
        Vertex a, center, c;
    };
    auto find_induced_p3(const Graph & g) -> std::optional<InducedP3>;
}

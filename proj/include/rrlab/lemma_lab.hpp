#pragma once

#include <rrlab/graph.hpp>
#include <rrlab/recognition.hpp>

#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace rrlab
{
    /// A chordless path p = x x' ... y' y of g \ t whose ends are t-complete,
    /// with t anticonnected. The graph is borrowed.
    struct LemmaInstance
    {
        const Graph & g;
        VertexSet t;
        Path p;
    };

    /// Whether a checker re-establishes the hypothesis on the host graph
    /// (weakly chordal, Meyniel, odd-hole-free) or trusts the caller. Sweeps
    /// test the graph once and then pass `assume`.
    enum class GraphClassCheck
    {
        verify,
        assume
    };

    /// Subpath p[begin..end] (indices into the path), end > begin.
    struct Interval
    {
        int begin = 0;
        int end = 0;

        auto length() const -> int { return end - begin; }
        auto operator==(const Interval &) const -> bool = default;
    };

    /// u sees exactly {x, x', y} on p, v sees exactly {x, y', y}, u !~ v.
    struct Leap
    {
        Vertex u = -1;
        Vertex v = -1;

        auto operator==(const Leap &) const -> bool = default;
    };

    struct InternalComplete
    {
        Vertex vertex;
    };
    struct LeapFound
    {
        Leap leap;
    };
    struct AntipathCase
    {
        Antipath antipath;
    };
    /// None of the three disjuncts holds. Only possible when g has an odd
    /// hole, which is carried along.
    struct Violation
    {
        Hole odd_hole;
    };
    using RRConclusion = std::variant<InternalComplete, LeapFound, AntipathCase, Violation>;

    auto conclusion_name(const RRConclusion & c) -> std::string;

    /// Throws InputError unless t is nonempty and anticonnected, p is a
    /// chordless path of g avoiding t, and both ends of p are t-complete.
    void validate_instance(const LemmaInstance & inst);

    /// Marks are vertices of p with a neighbour in t; intervals run between
    /// consecutive marks.
    auto intervals(const LemmaInstance & inst) -> std::vector<Interval>;
    auto find_leap(const LemmaInstance & inst) -> std::optional<Leap>;
    auto is_leap(const Graph & g, const Path & p, const Leap & leap) -> bool;
    /// Edges (p[i], p[i+1]) with both ends t-complete.
    auto t_complete_edges(const LemmaInstance & inst) -> std::vector<Edge>;

    /// Either a leap exists in t or p has an odd number of t-complete edges.
    /// Requires stable t, odd |p| >= 3 and (unless assumed) an odd-hole-free
    /// graph; violations of those raise PreconditionError.
    auto verify_parity_claim(const LemmaInstance & inst, GraphClassCheck check = GraphClassCheck::verify) -> bool;

    struct SieveCheck
    {
        long long union_size = 0;
        long long alternating_sum = 0;
        /// Whether every proper nonempty sub-family has an odd intersection.
        bool reduction_applies = false;
        bool reduction_holds = true;

        auto ok() const -> bool { return union_size == alternating_sum && reduction_holds; }
    };

    /// Evaluates |f(v1) u ... u f(vn)| against the inclusion-exclusion sum,
    /// f(v) being the {v}-complete edges of p, and the mod-2 reduction when
    /// it applies. Members of t are taken in ascending order; |t| <= 20.
    auto sieve_identity_check(const LemmaInstance & inst) -> SieveCheck;

    /// Antipath a..b with every interior vertex in `interior_in` and length
    /// at least min_len, searched as a chordless path of the complement.
    auto find_antipath_through(const Graph & g, Vertex a, Vertex b, const VertexSet & interior_in, int min_len)
        -> std::optional<Antipath>;

    /// Tries the three disjuncts in order and returns the first witness.
    /// Violation is returned only together with an odd hole of g; a
    /// violation on an odd-hole-free graph throws InvariantViolation.
    auto check_rr_conclusion(const LemmaInstance & inst) -> RRConclusion;

    auto check_meyniel_lemma(const Graph & g, Vertex v, const Path & p, GraphClassCheck check = GraphClassCheck::verify)
        -> bool;

    /// Internal t-complete vertex of p (first along p), nullopt if none.
    auto check_wc_lemma(const LemmaInstance & inst, GraphClassCheck check = GraphClassCheck::verify)
        -> std::optional<Vertex>;

    /// t nonempty, anticonnected, and C(t) contains two non-adjacent vertices.
    auto is_growable_t(const Graph & g, const VertexSet & t) -> bool;
    /// A vertex whose addition keeps is_growable_t, or nullopt when t is
    /// inclusion-maximal.
    auto find_t_extension(const Graph & g, const VertexSet & t) -> std::optional<Vertex>;

    /// For maximal t, every chordless path of g \ t with ends in C(t) lies in
    /// C(t). A non-maximal t raises InputError naming the extending vertex.
    auto check_maximal_T_path_lemma(const Graph & g, const VertexSet & t, const Path & p,
        GraphClassCheck check = GraphClassCheck::verify) -> bool;
}

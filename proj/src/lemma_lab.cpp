#include <rrlab/lemma_lab.hpp>
#include <rrlab/errors.hpp>

#include <algorithm>
#include <bit>
#include <sstream>

namespace rrlab
{
    namespace
    {
        auto describe(const LemmaInstance & inst) -> std::string
        {
            std::ostringstream out;
            out << "t=" << inst.t.to_string() << " p=[";
            for (std::size_t i = 0; i < inst.p.vertices.size(); ++i)
                out << (i ? "," : "") << inst.p.vertices[i];
            out << ']';
            return out.str();
        }

        void require_odd_length(const LemmaInstance & inst)
        {
            if (inst.p.length() < 3 || inst.p.length() % 2 == 0)
                throw PreconditionError("path must have odd length at least 3: " + describe(inst));
        }
    }

    auto conclusion_name(const RRConclusion & c) -> std::string
    {
        switch (c.index()) {
            case 0: return "internal-complete";
            case 1: return "leap";
            case 2: return "antipath";
            default: return "violation";
        }
    }

    void validate_instance(const LemmaInstance & inst)
    {
        const auto & g = inst.g;
        if (inst.t.universe() != g.order())
            throw InputError("t is not a vertex set of the graph");
        if (inst.t.empty())
            throw InputError("t must be nonempty");
        if (! is_anticonnected(g, inst.t))
            throw InputError("t is not anticonnected: " + describe(inst));
        if (! is_chordless_path(g, inst.p.vertices))
            throw InputError("p is not a chordless path: " + describe(inst));
        for (auto v : inst.p.vertices)
            if (inst.t.contains(v))
                throw InputError("p meets t: " + describe(inst));
        auto complete = complete_set(g, inst.t);
        if (! complete.contains(inst.p.front()) || ! complete.contains(inst.p.back()))
            throw InputError("ends of p are not t-complete: " + describe(inst));
    }

    auto intervals(const LemmaInstance & inst) -> std::vector<Interval>
    {
        std::vector<int> marked;
        const auto & seq = inst.p.vertices;
        for (std::size_t i = 0; i < seq.size(); ++i)
            if (inst.g.neighbours(seq[i]).intersects(inst.t))
                marked.push_back(static_cast<int>(i));
        std::vector<Interval> result;
        for (std::size_t k = 0; k + 1 < marked.size(); ++k)
            result.push_back(Interval{marked[k], marked[k + 1]});
        return result;
    }

    auto is_leap(const Graph & g, const Path & p, const Leap & leap) -> bool
    {
        if (p.length() < 3 || leap.u == leap.v || g.adjacent(leap.u, leap.v))
            return false;
        auto on_path = p.vertex_set(g.order());
        if (on_path.contains(leap.u) || on_path.contains(leap.v))
            return false;
        const auto & seq = p.vertices;
        auto n = seq.size();
        VertexSet u_pattern(g.order(), {seq[0], seq[1], seq[n - 1]});
        VertexSet v_pattern(g.order(), {seq[0], seq[n - 2], seq[n - 1]});
        return (g.neighbours(leap.u) & on_path) == u_pattern && (g.neighbours(leap.v) & on_path) == v_pattern;
    }

    auto find_leap(const LemmaInstance & inst) -> std::optional<Leap>
    {
        if (inst.p.length() < 3)
            throw InputError("leaps are defined for paths of length at least 3");
        const auto & g = inst.g;
        const auto & seq = inst.p.vertices;
        auto n = seq.size();
        auto on_path = inst.p.vertex_set(g.order());
        VertexSet u_pattern(g.order(), {seq[0], seq[1], seq[n - 1]});
        VertexSet v_pattern(g.order(), {seq[0], seq[n - 2], seq[n - 1]});

        std::vector<Vertex> us, vs;
        for (auto w : inst.t) {
            auto seen = g.neighbours(w) & on_path;
            if (seen == u_pattern)
                us.push_back(w);
            else if (seen == v_pattern)
                vs.push_back(w);
        }
        for (auto u : us)
            for (auto v : vs)
                if (! g.adjacent(u, v))
                    return Leap{u, v};
        return std::nullopt;
    }

    auto t_complete_edges(const LemmaInstance & inst) -> std::vector<Edge>
    {
        auto complete = complete_set(inst.g, inst.t);
        std::vector<Edge> result;
        const auto & seq = inst.p.vertices;
        for (std::size_t i = 0; i + 1 < seq.size(); ++i)
            if (complete.contains(seq[i]) && complete.contains(seq[i + 1]))
                result.emplace_back(seq[i], seq[i + 1]);
        return result;
    }

    auto verify_parity_claim(const LemmaInstance & inst, GraphClassCheck check) -> bool
    {
        validate_instance(inst);
        if (! is_stable(inst.g, inst.t))
            throw PreconditionError("parity claim needs a stable t: " + describe(inst));
        require_odd_length(inst);
        if (check == GraphClassCheck::verify && ! is_odd_hole_free(inst.g).verdict)
            throw PreconditionError("parity claim needs an odd-hole-free graph");
        return find_leap(inst).has_value() || t_complete_edges(inst).size() % 2 == 1;
    }

    auto sieve_identity_check(const LemmaInstance & inst) -> SieveCheck
    {
        const auto & seq = inst.p.vertices;
        if (seq.size() < 2 || seq.size() > 65)
            throw InputError("sieve check needs a path with 1..64 edges");
        auto members = inst.t.to_vector();
        if (members.empty() || members.size() > 20)
            throw InputError("sieve check needs 1..20 members in t");

        auto family_size = members.size();
        std::vector<std::uint64_t> f(family_size, 0);
        for (std::size_t k = 0; k < family_size; ++k)
            for (std::size_t i = 0; i + 1 < seq.size(); ++i)
                if (inst.g.adjacent(members[k], seq[i]) && inst.g.adjacent(members[k], seq[i + 1]))
                    f[k] |= std::uint64_t{1} << i;

        SieveCheck result;
        std::uint64_t united = 0;
        for (auto mask : f)
            united |= mask;
        result.union_size = std::popcount(united);

        auto subsets = std::size_t{1} << family_size;
        auto full = subsets - 1;
        std::vector<std::uint64_t> intersection(subsets, ~std::uint64_t{0});
        bool all_proper_odd = true;
        for (std::size_t mask = 1; mask < subsets; ++mask) {
            auto low = static_cast<std::size_t>(std::countr_zero(mask));
            intersection[mask] = intersection[mask & (mask - 1)] & f[low];
            long long count = std::popcount(intersection[mask]);
            result.alternating_sum += (std::popcount(mask) % 2 == 1) ? count : -count;
            if (mask != full && count % 2 == 0)
                all_proper_odd = false;
        }

        result.reduction_applies = all_proper_odd;
        if (all_proper_odd) {
            long long whole = std::popcount(intersection[full]);
            long long sign = (family_size % 2 == 1) ? 1 : -1;
            long long rhs = ((1LL << family_size) - 2) + sign * whole;
            result.reduction_holds = ((result.union_size - rhs) % 2) == 0;
        }
        return result;
    }

    auto find_antipath_through(const Graph & g, Vertex a, Vertex b, const VertexSet & interior_in, int min_len)
        -> std::optional<Antipath>
    {
        if (a == b)
            throw InputError("antipath endpoints must differ");
        auto co = complement(g);
        auto allowed = interior_in;
        allowed.insert(a);
        allowed.insert(b);
        std::optional<Antipath> found;
        for_each_chordless_path(co, a, b, allowed, [&](std::span<const Vertex> seq) {
            if (static_cast<int>(seq.size()) - 1 >= min_len) {
                found = Antipath{{seq.begin(), seq.end()}};
                return false;
            }
            return true;
        });
        return found;
    }

    auto check_rr_conclusion(const LemmaInstance & inst) -> RRConclusion
    {
        validate_instance(inst);
        if (inst.p.length() < 3 || inst.p.length() % 2 == 0)
            throw InputError("Roussel-Rubio instances need an odd path of length at least 3");

        auto complete = complete_set(inst.g, inst.t);
        const auto & seq = inst.p.vertices;
        for (std::size_t i = 1; i + 1 < seq.size(); ++i)
            if (complete.contains(seq[i]))
                return InternalComplete{seq[i]};

        if (auto leap = find_leap(inst))
            return LeapFound{*leap};

        if (inst.p.length() == 3)
            if (auto antipath = find_antipath_through(inst.g, seq[1], seq[2], inst.t, 3))
                return AntipathCase{std::move(*antipath)};

        auto hole = find_hole(inst.g, 5, Parity::odd);
        if (! hole)
            throw InvariantViolation("no disjunct of the Roussel-Rubio conclusion holds on an odd-hole-free graph: "
                + describe(inst));
        return Violation{std::move(*hole)};
    }

    auto check_meyniel_lemma(const Graph & g, Vertex v, const Path & p, GraphClassCheck check) -> bool
    {
        if (v < 0 || v >= g.order())
            throw InputError("vertex out of range");
        if (! is_chordless_path(g, p.vertices))
            throw InputError("p is not a chordless path");
        if (std::find(p.vertices.begin(), p.vertices.end(), v) != p.vertices.end())
            throw InputError("p passes through v");
        if (p.length() < 3 || p.length() % 2 == 0)
            throw PreconditionError("Meyniel lemma needs an odd path of length at least 3");
        if (! g.adjacent(v, p.front()) || ! g.adjacent(v, p.back()))
            throw PreconditionError("ends of p must be adjacent to v");
        if (check == GraphClassCheck::verify && ! is_meyniel(g).verdict)
            throw PreconditionError("Meyniel lemma needs a Meyniel graph");
        return std::all_of(p.vertices.begin(), p.vertices.end(), [&](Vertex w) { return g.adjacent(v, w); });
    }

    auto check_wc_lemma(const LemmaInstance & inst, GraphClassCheck check) -> std::optional<Vertex>
    {
        validate_instance(inst);
        if (inst.p.length() < 3)
            throw PreconditionError("weakly chordal lemma needs a path of length at least 3: " + describe(inst));
        if (check == GraphClassCheck::verify && ! is_weakly_chordal(inst.g).verdict)
            throw PreconditionError("weakly chordal lemma needs a weakly chordal graph");
        auto complete = complete_set(inst.g, inst.t);
        const auto & seq = inst.p.vertices;
        for (std::size_t i = 1; i + 1 < seq.size(); ++i)
            if (complete.contains(seq[i]))
                return seq[i];
        return std::nullopt;
    }

    auto is_growable_t(const Graph & g, const VertexSet & t) -> bool
    {
        if (t.empty() || ! is_anticonnected(g, t))
            return false;
        auto complete = complete_set(g, t);
        for (auto v : complete)
            if (! (complete - g.neighbours(v)).without(v).empty())
                return true;
        return false;
    }

    auto find_t_extension(const Graph & g, const VertexSet & t) -> std::optional<Vertex>
    {
        for (auto v : g.vertices() - t)
            if (is_growable_t(g, t.with(v)))
                return v;
        return std::nullopt;
    }

    auto check_maximal_T_path_lemma(const Graph & g, const VertexSet & t, const Path & p, GraphClassCheck check) -> bool
    {
        if (t.universe() != g.order())
            throw InputError("t is not a vertex set of the graph");
        if (! is_growable_t(g, t))
            throw InputError("t must be nonempty, anticonnected, with two non-adjacent t-complete vertices");
        if (auto extension = find_t_extension(g, t))
            throw InputError("t is not maximal: vertex " + std::to_string(*extension) + " extends it");
        if (! is_chordless_path(g, p.vertices))
            throw InputError("p is not a chordless path");
        auto complete = complete_set(g, t);
        for (auto v : p.vertices)
            if (t.contains(v))
                throw InputError("p meets t");
        if (! complete.contains(p.front()) || ! complete.contains(p.back()))
            throw InputError("ends of p are not in C(t)");
        if (check == GraphClassCheck::verify && ! is_weakly_chordal(g).verdict)
            throw PreconditionError("maximal-t path lemma needs a weakly chordal graph");
        return p.vertex_set(g.order()).is_subset_of(complete);
    }
}

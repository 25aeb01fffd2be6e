#include <rrlab/decomposition.hpp>
#include <rrlab/errors.hpp>
#include <rrlab/lemma_lab.hpp>
#include <rrlab/recognition.hpp>

#include <sstream>

namespace rrlab
{
    auto branch_name(CutsetBranch b) -> std::string
    {
        switch (b) {
            case CutsetBranch::i: return "i";
            case CutsetBranch::ii: return "ii";
            case CutsetBranch::iii: return "iii";
            case CutsetBranch::iv: return "iv";
            case CutsetBranch::bruteforce: return "bruteforce";
        }
        return "?";
    }

    auto verify_star_cutset(const Graph & g, const StarCutset & s) -> bool
    {
        if (s.members.universe() != g.order() || s.center < 0 || s.center >= g.order())
            return false;
        if (! s.members.contains(s.center))
            return false;
        if (! s.members.is_subset_of(g.neighbours(s.center).with(s.center)))
            return false;
        return components(g, g.vertices() - s.members).size() >= 2;
    }

    auto grow_maximal_T(const Graph & g, const VertexSet & seed) -> VertexSet
    {
        if (seed.universe() != g.order() || ! is_growable_t(g, seed))
            throw InputError("seed " + seed.to_string()
                + " must be anticonnected with two non-adjacent vertices complete to it");
        auto t = seed;
        while (auto extension = find_t_extension(g, t))
            t.insert(*extension);
        return t;
    }

    namespace
    {
        auto lift_cutset(const InducedSubgraph & sub, const StarCutset & s, int order) -> StarCutset
        {
            return StarCutset{sub.lift(s.center), sub.lift(s.members, order), s.branch};
        }

        // The case analysis of the decomposition argument. Returns nullopt
        // exactly on complete graphs and complements of perfect matchings.
        auto find_cutset(const Graph & g) -> std::optional<StarCutset>
        {
            auto n = g.order();
            auto p3 = find_induced_p3(g);
            if (! p3) {
                if (components(g, g.vertices()).size() < 2)
                    return std::nullopt;
                for (Vertex c = 0; c < n; ++c)
                    if (components(g, g.vertices().without(c)).size() >= 2)
                        return StarCutset{c, VertexSet(n, {c}), CutsetBranch::i};
                // Two non-adjacent vertices: a co-matching.
                return std::nullopt;
            }

            auto t = grow_maximal_T(g, VertexSet(n, {p3->center}));
            auto complete = complete_set(g, t);
            auto inner = induced_subgraph(g, complete);
            if (auto s = find_cutset(inner.graph)) {
                auto lifted = lift_cutset(inner, *s, n);
                return StarCutset{lifted.center, lifted.members | t, CutsetBranch::ii};
            }
            if (! is_complement_of_perfect_matching(inner.graph))
                throw InvariantViolation("C(T)=" + complete.to_string()
                    + " has no star cutset and is not the complement of a perfect matching");

            auto outside = g.vertices() - t - complete;
            if (outside.empty()) {
                if (t.size() == 1) {
                    for (auto x : complete) {
                        auto partners = (complete - g.neighbours(x)).without(x);
                        auto y = partners.next(x);
                        if (y != -1)
                            return StarCutset{t.first(), ((t | complete).without(x)).without(y), CutsetBranch::iii};
                    }
                    throw InvariantViolation("C(T) has no non-adjacent pair");
                }
                auto inside = induced_subgraph(g, t);
                if (is_complement_of_perfect_matching(inside.graph))
                    return std::nullopt;
                auto s = find_cutset(inside.graph);
                if (! s)
                    throw InvariantViolation("G[T] for T=" + t.to_string() + " has no star cutset");
                auto lifted = lift_cutset(inside, *s, n);
                return StarCutset{lifted.center, lifted.members | complete, CutsetBranch::iii};
            }

            for (auto x : outside) {
                auto seen = g.neighbours(x) & complete;
                if (seen.empty())
                    continue;
                auto y = seen.first();
                auto y_partner = (complete - g.neighbours(y)).without(y).first();
                return StarCutset{y, (t | complete).without(y_partner), CutsetBranch::iv};
            }
            auto c = complete.first();
            return StarCutset{c, t.with(c), CutsetBranch::iv};
        }

        auto find_verified_cutset(const Graph & g) -> std::optional<StarCutset>
        {
            auto s = find_cutset(g);
            if (s && ! verify_star_cutset(g, *s))
                throw InvariantViolation("branch " + branch_name(s->branch) + " produced S=" + s->members.to_string()
                    + " center " + std::to_string(s->center) + ", which is not a star cutset");
            return s;
        }

        void require_weakly_chordal(const Graph & g)
        {
            auto cert = is_weakly_chordal(g);
            if (! cert.verdict) {
                std::ostringstream out;
                out << "graph is not weakly chordal, witness=" << witness_name(*cert.witness);
                for (auto v : witness_vertices(*cert.witness))
                    out << ' ' << v;
                throw InputError(out.str());
            }
        }

        auto build(const Graph & g, const std::vector<Vertex> & to_root, int root_order) -> DecompositionTree
        {
            DecompositionTree node;
            node.vertices = VertexSet(root_order, to_root);
            if (is_complete(g)) {
                node.kind = DecompositionTree::Kind::clique;
                return node;
            }
            if (is_complement_of_perfect_matching(g)) {
                node.kind = DecompositionTree::Kind::co_matching;
                return node;
            }
            auto s = find_verified_cutset(g);
            if (! s)
                throw InvariantViolation("weakly chordal block " + node.vertices.to_string()
                    + " is neither terminal nor has a star cutset");

            node.kind = DecompositionTree::Kind::split;
            VertexSet lifted(root_order);
            for (auto v : s->members)
                lifted.insert(to_root[static_cast<std::size_t>(v)]);
            node.cutset = StarCutset{to_root[static_cast<std::size_t>(s->center)], lifted, s->branch};

            for (auto & part : components(g, g.vertices() - s->members)) {
                auto block = induced_subgraph(g, part | s->members);
                std::vector<Vertex> child_to_root;
                for (auto v : block.parent)
                    child_to_root.push_back(to_root[static_cast<std::size_t>(v)]);
                node.children.push_back(build(block.graph, child_to_root, root_order));
            }
            return node;
        }

        void render(const DecompositionTree & tree, int depth, std::ostringstream & out)
        {
            out << std::string(static_cast<std::size_t>(2 * depth), ' ');
            switch (tree.kind) {
                case DecompositionTree::Kind::clique: out << "LEAF clique " << tree.vertices.to_string() << '\n'; break;
                case DecompositionTree::Kind::co_matching:
                    out << "LEAF co-matching " << tree.vertices.to_string() << '\n';
                    break;
                case DecompositionTree::Kind::split:
                    out << "SPLIT center=" << tree.cutset->center << " S=" << tree.cutset->members.to_string()
                        << " branch=" << branch_name(tree.cutset->branch) << '\n';
                    for (auto & child : tree.children)
                        render(child, depth + 1, out);
                    break;
            }
        }
    }

    auto find_star_cutset(const Graph & g) -> std::optional<StarCutset>
    {
        require_weakly_chordal(g);
        return find_verified_cutset(g);
    }

    auto star_cutset_exists_bruteforce(const Graph & g) -> std::optional<StarCutset>
    {
        for (Vertex c = 0; c < g.order(); ++c) {
            auto nb = g.neighbours(c).to_vector();
            if (nb.size() > 24)
                throw InputError("brute-force star cutset search is limited to degree 24");
            for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << nb.size()); ++mask) {
                VertexSet s(g.order(), {c});
                for (std::size_t k = 0; k < nb.size(); ++k)
                    if ((mask >> k) & 1u)
                        s.insert(nb[k]);
                if (components(g, g.vertices() - s).size() >= 2)
                    return StarCutset{c, s, CutsetBranch::bruteforce};
            }
        }
        return std::nullopt;
    }

    auto decompose(const Graph & g) -> DecompositionTree
    {
        require_weakly_chordal(g);
        std::vector<Vertex> identity(static_cast<std::size_t>(g.order()));
        for (Vertex v = 0; v < g.order(); ++v)
            identity[static_cast<std::size_t>(v)] = v;
        return build(g, identity, g.order());
    }

    namespace
    {
        auto validate_node(const Graph & g, const DecompositionTree & node) -> bool
        {
            if (node.vertices.universe() != g.order())
                return false;
            auto block = induced_subgraph(g, node.vertices);
            switch (node.kind) {
                case DecompositionTree::Kind::clique: return node.children.empty() && is_complete(block.graph);
                case DecompositionTree::Kind::co_matching:
                    return node.children.empty() && is_complement_of_perfect_matching(block.graph);
                case DecompositionTree::Kind::split: break;
            }
            if (! node.cutset)
                return false;
            const auto & s = *node.cutset;
            if (! s.members.is_subset_of(node.vertices) || ! s.members.contains(s.center))
                return false;
            if (! s.members.is_subset_of(g.neighbours(s.center).with(s.center)))
                return false;
            auto parts = components(g, node.vertices - s.members);
            if (parts.size() < 2 || parts.size() != node.children.size())
                return false;
            for (std::size_t k = 0; k < parts.size(); ++k) {
                const auto & child = node.children[k];
                if (child.vertices != (parts[k] | s.members))
                    return false;
                if (child.vertices.size() >= node.vertices.size())
                    return false;
                if (! validate_node(g, child))
                    return false;
            }
            return true;
        }
    }

    auto validate_tree(const Graph & g, const DecompositionTree & tree) -> bool
    {
        return tree.vertices == g.vertices() && validate_node(g, tree);
    }

    auto to_text(const DecompositionTree & tree) -> std::string
    {
        std::ostringstream out;
        render(tree, 0, out);
        return out.str();
    }
}

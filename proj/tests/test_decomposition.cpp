#include <doctest.h>

#include "oracles.hpp"

#include <rrlab/decomposition.hpp>
#include <rrlab/errors.hpp>
#include <rrlab/named_graphs.hpp>
#include <rrlab/oracle_harness.hpp>
#include <rrlab/recognition.hpp>

using namespace rrlab;

namespace
{
    auto direct_complete_to(const Graph & g, const std::vector<Vertex> & t, Vertex v) -> bool
    {
        for (auto w : t)
            if (w == v || ! g.adjacent(v, w))
                return false;
        return true;
    }

    // Nonempty, anticonnected, and C(t) has a non-adjacent pair; anticonnectivity
    // by a flood fill over non-edges.
    auto direct_growable(const Graph & g, const std::vector<Vertex> & t) -> bool
    {
        if (t.empty())
            return false;
        std::vector<Vertex> seen{t.front()};
        for (std::size_t k = 0; k < seen.size(); ++k)
            for (auto w : t)
                if (w != seen[k] && ! g.adjacent(seen[k], w) && std::find(seen.begin(), seen.end(), w) == seen.end())
                    seen.push_back(w);
        if (seen.size() != t.size())
            return false;
        for (Vertex a = 0; a < g.order(); ++a)
            for (Vertex b = a + 1; b < g.order(); ++b)
                if (! g.adjacent(a, b) && direct_complete_to(g, t, a) && direct_complete_to(g, t, b))
                    return true;
        return false;
    }

    auto direct_star_cutset(const Graph & g, Vertex c, const VertexSet & s) -> bool
    {
        auto m = oracle::matrix_of(g);
        if (! s.contains(c))
            return false;
        for (auto v : s)
            if (v != c && ! g.adjacent(c, v))
                return false;
        std::vector<int> rest;
        for (Vertex v = 0; v < g.order(); ++v)
            if (! s.contains(v))
                rest.push_back(v);
        if (rest.size() < 2)
            return false;
        std::vector<int> seen{rest.front()};
        for (std::size_t k = 0; k < seen.size(); ++k)
            for (auto w : rest)
                if (m[static_cast<std::size_t>(seen[k])][static_cast<std::size_t>(w)]
                    && std::find(seen.begin(), seen.end(), w) == seen.end())
                    seen.push_back(w);
        return seen.size() < rest.size();
    }

    auto direct_clique(const Graph & g, const VertexSet & block) -> bool
    {
        for (auto u : block)
            for (auto v : block)
                if (u < v && ! g.adjacent(u, v))
                    return false;
        return true;
    }

    // Every vertex misses exactly one other vertex of the block.
    auto direct_co_matching(const Graph & g, const VertexSet & block) -> bool
    {
        if (block.empty())
            return false;
        for (auto u : block) {
            int missing = 0;
            for (auto v : block)
                if (u != v && ! g.adjacent(u, v))
                    ++missing;
            if (missing != 1)
                return false;
        }
        return true;
    }

    // Independent re-check of a tree: leaves by definition, splits by
    // recomputing S-star property, components and child blocks.
    auto tree_ok(const Graph & g, const DecompositionTree & node) -> bool
    {
        using Kind = DecompositionTree::Kind;
        if (node.kind == Kind::clique)
            return node.children.empty() && direct_clique(g, node.vertices);
        if (node.kind == Kind::co_matching)
            return node.children.empty() && direct_co_matching(g, node.vertices);
        if (! node.cutset)
            return false;
        auto block = induced_subgraph(g, node.vertices);
        std::vector<Vertex> to_local(static_cast<std::size_t>(g.order()), -1);
        for (std::size_t k = 0; k < block.parent.size(); ++k)
            to_local[static_cast<std::size_t>(block.parent[k])] = static_cast<Vertex>(k);
        VertexSet local_s(block.graph.order());
        for (auto v : node.cutset->members) {
            if (! node.vertices.contains(v))
                return false;
            local_s.insert(to_local[static_cast<std::size_t>(v)]);
        }
        if (! direct_star_cutset(block.graph, to_local[static_cast<std::size_t>(node.cutset->center)], local_s))
            return false;
        VertexSet covered(g.order());
        for (auto & child : node.children) {
            if (! node.cutset->members.is_subset_of(child.vertices) || child.vertices.size() >= node.vertices.size())
                return false;
            auto own = child.vertices - node.cutset->members;
            if (own.empty() || own.intersects(covered))
                return false;
            covered |= own;
            if (! tree_ok(g, child))
                return false;
        }
        return covered == node.vertices - node.cutset->members;
    }

    auto count_leaves(const DecompositionTree & node) -> int
    {
        if (node.children.empty())
            return 1;
        int total = 0;
        for (auto & child : node.children)
            total += count_leaves(child);
        return total;
    }
}

TEST_CASE("grow maximal T")
{
    CHECK(grow_maximal_T(named::path(3), VertexSet(3, {1})) == VertexSet(3, {1}));
    CHECK(grow_maximal_T(named::cycle(4), VertexSet(4, {0})) == VertexSet(4, {0, 2}));
    CHECK_THROWS_AS(grow_maximal_T(named::path(3), VertexSet(3, {0})), InputError);
    CHECK_THROWS_AS(grow_maximal_T(named::complete(3), VertexSet(3, {0})), InputError);

    SUBCASE("output passes the maximality validator on random weakly chordal graphs")
    {
        ClassSampler sampler({CorpusMode::random, 5, 10, 0.5, 0, 404, ClassFilter::weakly_chordal, 0});
        int grown = 0;
        for (int k = 0; k < 1000; ++k) {
            auto g = sampler.next();
            auto p3 = find_induced_p3(g);
            if (! p3)
                continue;
            auto t = grow_maximal_T(g, VertexSet(g.order(), {p3->center}));
            auto members = t.to_vector();
            REQUIRE(t.contains(p3->center));
            REQUIRE(direct_growable(g, members));
            for (Vertex v = 0; v < g.order(); ++v) {
                if (t.contains(v))
                    continue;
                auto bigger = members;
                bigger.push_back(v);
                REQUIRE_FALSE(direct_growable(g, bigger));
            }
            grown += t.size() > 1 ? 1 : 0;
        }
        CHECK(grown > 0);
    }
}

TEST_CASE("verify star cutset")
{
    CHECK(verify_star_cutset(named::path(3), {1, VertexSet(3, {1})}));
    CHECK_FALSE(verify_star_cutset(named::cycle(5), {0, VertexSet(5, {0, 1, 4})}));
    for (Vertex v = 0; v < 4; ++v)
        CHECK_FALSE(verify_star_cutset(named::cycle(4), {v, VertexSet(4, {v})}));
    // Center outside S, or S outside the star.
    CHECK_FALSE(verify_star_cutset(named::path(3), {0, VertexSet(3, {1})}));
    CHECK_FALSE(verify_star_cutset(named::path(4), {0, VertexSet(4, {0, 2})}));
}

TEST_CASE("find star cutset")
{
    auto p3 = find_star_cutset(named::path(3));
    REQUIRE(p3);
    CHECK(p3->center == 1);
    CHECK(p3->members == VertexSet(3, {1}));

    CHECK_FALSE(find_star_cutset(named::complete(4)).has_value());
    CHECK_FALSE(find_star_cutset(named::cycle(4)).has_value());

    auto p4 = find_star_cutset(named::path(4));
    REQUIRE(p4);
    CHECK((p4->center == 1 || p4->center == 2));
    CHECK(direct_star_cutset(named::path(4), p4->center, p4->members));

    try {
        find_star_cutset(named::cycle(6));
        FAIL("C6 accepted");
    }
    catch (const InputError & e) {
        CHECK(std::string(e.what()).find("hole[6]") != std::string::npos);
    }

    SUBCASE("agrees with the definitional oracle on every weakly chordal graph up to 6 vertices")
    {
        for (int n = 0; n <= 6; ++n) {
            LabeledGraphEnumerator all(n);
            while (auto g = all.next()) {
                if (! oracle::weakly_chordal(*g))
                    continue;
                auto s = find_star_cutset(*g);
                REQUIRE(s.has_value() == oracle::has_star_cutset(*g));
                if (s)
                    REQUIRE(direct_star_cutset(*g, s->center, s->members));
            }
        }
    }

    SUBCASE("agrees with the oracle on random weakly chordal graphs, 7 to 10 vertices")
    {
        ClassSampler sampler({CorpusMode::random, 7, 10, 0.5, 0, 8080, ClassFilter::weakly_chordal, 0});
        for (int k = 0; k < 1500; ++k) {
            auto g = sampler.next();
            auto s = find_star_cutset(g);
            REQUIRE(s.has_value() == oracle::has_star_cutset(g));
            if (s)
                REQUIRE(direct_star_cutset(g, s->center, s->members));
        }
    }
}

TEST_CASE("brute-force star cutset search")
{
    CHECK_FALSE(star_cutset_exists_bruteforce(named::cycle(5)).has_value());
    CHECK_FALSE(star_cutset_exists_bruteforce(named::cycle(7)).has_value());
    CHECK_FALSE(star_cutset_exists_bruteforce(complement(named::cycle(7))).has_value());
    CHECK(star_cutset_exists_bruteforce(named::path(3)).has_value());

    for (int n = 0; n <= 6; ++n) {
        LabeledGraphEnumerator all(n);
        while (auto g = all.next()) {
            auto s = star_cutset_exists_bruteforce(*g);
            REQUIRE(s.has_value() == oracle::has_star_cutset(*g));
            if (s)
                REQUIRE(verify_star_cutset(*g, *s));
        }
    }
}

TEST_CASE("decompose")
{
    auto k3 = decompose(named::complete(3));
    CHECK(k3.kind == DecompositionTree::Kind::clique);
    CHECK(to_text(k3) == "LEAF clique {0,1,2}\n");

    auto c4 = decompose(named::cycle(4));
    CHECK(c4.kind == DecompositionTree::Kind::co_matching);
    CHECK(to_text(c4) == "LEAF co-matching {0,1,2,3}\n");

    auto p4 = decompose(named::path(4));
    REQUIRE(p4.kind == DecompositionTree::Kind::split);
    CHECK(validate_tree(named::path(4), p4));
    CHECK(tree_ok(named::path(4), p4));
    std::function<void(const DecompositionTree &)> leaves_are_cliques = [&](const DecompositionTree & node) {
        if (node.children.empty())
            CHECK(node.kind == DecompositionTree::Kind::clique);
        for (auto & child : node.children)
            leaves_are_cliques(child);
    };
    leaves_are_cliques(p4);

    auto text = to_text(p4);
    CHECK(text.starts_with("SPLIT center="));
    CHECK(text.find("\n    LEAF clique {0,1}\n") != std::string::npos);

    CHECK(decompose(named::edgeless(0)).kind == DecompositionTree::Kind::clique);
    CHECK(decompose(named::edgeless(2)).kind == DecompositionTree::Kind::co_matching);
    auto three = decompose(named::edgeless(3));
    CHECK(three.kind == DecompositionTree::Kind::split);
    CHECK(count_leaves(three) == 2);

    CHECK_THROWS_AS(decompose(named::cycle(5)), InputError);
    CHECK_THROWS_AS(decompose(complement(named::cycle(7))), InputError);

    // A tampered tree must be rejected by the library validator.
    auto broken = p4;
    broken.children.pop_back();
    CHECK_FALSE(validate_tree(named::path(4), broken));

    SUBCASE("every weakly chordal graph up to 6 vertices decomposes into a valid tree")
    {
        for (int n = 0; n <= 6; ++n) {
            LabeledGraphEnumerator all(n);
            while (auto g = all.next()) {
                if (! is_weakly_chordal(*g).verdict)
                    continue;
                auto tree = decompose(*g);
                REQUIRE(validate_tree(*g, tree));
                REQUIRE(tree_ok(*g, tree));
                REQUIRE(to_text(decompose(*g)) == to_text(tree));
            }
        }
    }

    SUBCASE("random weakly chordal graphs up to 14 vertices")
    {
        ClassSampler sampler({CorpusMode::random, 7, 14, 0.5, 0, 99, ClassFilter::weakly_chordal, 0});
        for (int k = 0; k < 800; ++k) {
            auto g = sampler.next();
            auto tree = decompose(g);
            REQUIRE(validate_tree(g, tree));
            REQUIRE(tree_ok(g, tree));
        }
    }
}

TEST_CASE("corollary: a weakly chordal graph or its complement has a star cutset")
{
    for (int n = 3; n <= 6; ++n) {
        LabeledGraphEnumerator all(n);
        while (auto g = all.next()) {
            if (! oracle::weakly_chordal(*g))
                continue;
            REQUIRE((oracle::has_star_cutset(*g) || oracle::has_star_cutset(complement(*g))));
        }
    }
}

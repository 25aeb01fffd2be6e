#include <rrlab/named_graphs.hpp>
#include <rrlab/errors.hpp>

namespace rrlab::named
{
    auto complete(int n) -> Graph
    {
        GraphBuilder b(n);
        for (Vertex u = 0; u < n; ++u)
            for (Vertex v = u + 1; v < n; ++v)
                b.add_edge(u, v);
        return std::move(b).build();
    }

    auto edgeless(int n) -> Graph
    {
        return GraphBuilder(n).build();
    }

    auto path(int n) -> Graph
    {
        GraphBuilder b(n);
        for (Vertex v = 0; v + 1 < n; ++v)
            b.add_edge(v, v + 1);
        return std::move(b).build();
    }

    auto cycle(int n) -> Graph
    {
        if (n < 3)
            throw InputError("a cycle needs at least 3 vertices");
        GraphBuilder b(n);
        for (Vertex v = 0; v < n; ++v)
            b.add_edge(v, (v + 1) % n);
        return std::move(b).build();
    }

    auto star(int leaves) -> Graph
    {
        GraphBuilder b(leaves + 1);
        for (Vertex v = 1; v <= leaves; ++v)
            b.add_edge(0, v);
        return std::move(b).build();
    }

    auto matching(int k) -> Graph
    {
        GraphBuilder b(2 * k);
        for (Vertex v = 0; v < 2 * k; v += 2)
            b.add_edge(v, v + 1);
        return std::move(b).build();
    }

    auto disjoint_union(const Graph & a, const Graph & b) -> Graph
    {
        GraphBuilder result(a.order() + b.order());
        for (auto [u, v] : a.edges())
            result.add_edge(u, v);
        for (auto [u, v] : b.edges())
            result.add_edge(a.order() + u, a.order() + v);
        return std::move(result).build();
    }
}

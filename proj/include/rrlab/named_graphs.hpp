#pragma once

#include <rrlab/graph.hpp>

namespace rrlab::named
{
    auto complete(int n) -> Graph;
    auto edgeless(int n) -> Graph;
    /// 0-1-2-...-(n-1)
    auto path(int n) -> Graph;
    /// 0-1-...-(n-1)-0, n >= 3
    auto cycle(int n) -> Graph;
    /// center 0, leaves 1..leaves
    auto star(int leaves) -> Graph;
    /// k disjoint edges 0-1, 2-3, ...
    auto matching(int k) -> Graph;
    auto disjoint_union(const Graph & a, const Graph & b) -> Graph;
}

#pragma once

#include <rrlab/graph.hpp>

#include <istream>
#include <string>
#include <string_view>
#include <vector>

namespace rrlab
{
    /// graph6, as in the nauty/Gtools format description: a size prefix
    /// (one byte for n <= 62, 126 + three bytes up to 258047, 126 126 + six
    /// bytes beyond) followed by the upper triangle in column order, six
    /// bits per printable byte offset by 63.
    auto to_graph6(const Graph & g) -> std::string;
    auto from_graph6(std::string_view line) -> Graph;

    /// Edge-list text: first line "n m", then m lines "u v", 0-indexed.
    auto to_edge_list(const Graph & g) -> std::string;
    auto read_edge_list(std::istream & in) -> Graph;

    /// One graph per non-empty line; an optional ">>graph6<<" header is
    /// skipped. Parse errors name the offending line.
    auto read_graph6_lines(std::istream & in) -> std::vector<Graph>;
}

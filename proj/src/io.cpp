#include <rrlab/io.hpp>
#include <rrlab/errors.hpp>

#include <cstdint>
#include <sstream>

namespace rrlab
{
    namespace
    {
        constexpr int graph6_bias = 63;
        constexpr int graph6_escape = 126;

        void append_size(std::string & out, std::uint64_t n)
        {
            if (n <= 62) {
                out.push_back(static_cast<char>(n + graph6_bias));
            }
            else if (n <= 258047) {
                out.push_back(static_cast<char>(graph6_escape));
                for (int shift = 12; shift >= 0; shift -= 6)
                    out.push_back(static_cast<char>(((n >> shift) & 63u) + graph6_bias));
            }
            else {
                out.push_back(static_cast<char>(graph6_escape));
                out.push_back(static_cast<char>(graph6_escape));
                for (int shift = 30; shift >= 0; shift -= 6)
                    out.push_back(static_cast<char>(((n >> shift) & 63u) + graph6_bias));
            }
        }

        auto sextet(std::string_view line, std::size_t at) -> std::uint64_t
        {
            if (at >= line.size())
                throw InputError("graph6 string truncated");
            auto c = static_cast<unsigned char>(line[at]);
            if (c < graph6_bias || c > graph6_escape)
                throw InputError("graph6 byte out of printable range at offset " + std::to_string(at));
            return c - graph6_bias;
        }
    }

    auto to_graph6(const Graph & g) -> std::string
    {
        std::string out;
        append_size(out, static_cast<std::uint64_t>(g.order()));
        unsigned bits = 0;
        int filled = 0;
        for (Vertex j = 1; j < g.order(); ++j)
            for (Vertex i = 0; i < j; ++i) {
                bits = (bits << 1) | (g.adjacent(i, j) ? 1u : 0u);
                if (++filled == 6) {
                    out.push_back(static_cast<char>(bits + graph6_bias));
                    bits = 0;
                    filled = 0;
                }
            }
        if (filled > 0)
            out.push_back(static_cast<char>((bits << (6 - filled)) + graph6_bias));
        return out;
    }

    auto from_graph6(std::string_view line) -> Graph
    {
        while (! line.empty() && (line.back() == '\n' || line.back() == '\r'))
            line.remove_suffix(1);
        if (line.starts_with(">>graph6<<"))
            line.remove_prefix(10);
        if (line.empty())
            throw InputError("empty graph6 string");
        if (line.front() == ':' || line.front() == '&')
            throw InputError("sparse6/digraph6 input is not supported");

        std::uint64_t n = 0;
        std::size_t at = 0;
        if (static_cast<unsigned char>(line[0]) != graph6_escape) {
            n = sextet(line, 0);
            at = 1;
        }
        else if (line.size() > 1 && static_cast<unsigned char>(line[1]) != graph6_escape) {
            for (std::size_t k = 1; k <= 3; ++k)
                n = (n << 6) | sextet(line, k);
            at = 4;
        }
        else {
            for (std::size_t k = 2; k <= 7; ++k)
                n = (n << 6) | sextet(line, k);
            at = 8;
        }
        if (n > 100000)
            throw InputError("graph6 vertex count " + std::to_string(n) + " is beyond supported size");

        auto order = static_cast<int>(n);
        std::uint64_t pairs = n * (n - (n > 0 ? 1 : 0)) / 2;
        std::size_t expected = at + static_cast<std::size_t>((pairs + 5) / 6);
        if (line.size() != expected)
            throw InputError("graph6 string has " + std::to_string(line.size()) + " bytes, expected "
                + std::to_string(expected));

        GraphBuilder builder(order);
        std::uint64_t index = 0;
        for (Vertex j = 1; j < order; ++j)
            for (Vertex i = 0; i < j; ++i, ++index) {
                auto byte = sextet(line, at + static_cast<std::size_t>(index / 6));
                if ((byte >> (5 - index % 6)) & 1u)
                    builder.add_edge(i, j);
            }
        if (pairs % 6 != 0) {
            auto last = sextet(line, expected - 1);
            auto padding = static_cast<unsigned>(6 - pairs % 6);
            if (last & ((1u << padding) - 1))
                throw InputError("graph6 padding bits are not zero");
        }
        return std::move(builder).build();
    }

    auto to_edge_list(const Graph & g) -> std::string
    {
        std::ostringstream out;
        auto edges = g.edges();
        out << g.order() << ' ' << edges.size() << '\n';
        for (auto [u, v] : edges)
            out << u << ' ' << v << '\n';
        return out.str();
    }

    auto read_edge_list(std::istream & in) -> Graph
    {
        std::string line;
        int line_number = 0;
        auto next_line = [&]() -> bool {
            while (std::getline(in, line)) {
                ++line_number;
                if (line.find_first_not_of(" \t\r") != std::string::npos)
                    return true;
            }
            return false;
        };
        auto fail = [&](const std::string & why) -> InputError {
            return InputError("edge list line " + std::to_string(line_number) + ": " + why + " ('" + line + "')");
        };

        if (! next_line())
            throw InputError("edge list is empty");
        long long n = -1, m = -1;
        {
            std::istringstream header(line);
            std::string extra;
            if (! (header >> n >> m) || (header >> extra) || n < 0 || m < 0)
                throw fail("expected header 'n m' with non-negative integers");
        }
        if (n > 100000)
            throw fail("vertex count too large");

        GraphBuilder builder(static_cast<int>(n));
        for (long long k = 0; k < m; ++k) {
            if (! next_line())
                throw InputError("edge list ends after " + std::to_string(k) + " of " + std::to_string(m) + " edges");
            std::istringstream row(line);
            long long u = -1, v = -1;
            std::string extra;
            if (! (row >> u >> v) || (row >> extra))
                throw fail("expected 'u v'");
            if (u < 0 || v < 0 || u >= n || v >= n)
                throw fail("endpoint out of range");
            if (u == v)
                throw fail("self-loop");
            if (builder.has_edge(static_cast<Vertex>(u), static_cast<Vertex>(v)))
                throw fail("duplicate edge");
            builder.add_edge(static_cast<Vertex>(u), static_cast<Vertex>(v));
        }
        if (next_line())
            throw fail("trailing content after the declared edges");
        return std::move(builder).build();
    }

    auto read_graph6_lines(std::istream & in) -> std::vector<Graph>
    {
        std::vector<Graph> result;
        std::string line;
        int line_number = 0;
        while (std::getline(in, line)) {
            ++line_number;
            while (! line.empty() && (line.back() == '\r' || line.back() == ' '))
                line.pop_back();
            if (line.empty())
                continue;
            try {
                result.push_back(from_graph6(line));
            }
            catch (const InputError & e) {
                throw InputError("graph6 line " + std::to_string(line_number) + ": " + e.what());
            }
        }
        return result;
    }
}

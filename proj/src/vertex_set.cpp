#include <rrlab/vertex_set.hpp>
#include <rrlab/errors.hpp>

#include <sstream>

namespace rrlab
{
    VertexSet::VertexSet(int universe) :
        _universe(universe)
    {
        if (universe < 0)
            throw InputError("negative vertex-set universe");
        if (universe > 64)
            _large.assign((static_cast<std::size_t>(universe) + 63) / 64, 0);
    }

    VertexSet::VertexSet(int universe, std::initializer_list<Vertex> members) :
        VertexSet(universe)
    {
        for (auto v : members)
            insert(v);
    }

    VertexSet::VertexSet(int universe, std::span<const Vertex> members) :
        VertexSet(universe)
    {
        for (auto v : members)
            insert(v);
    }

    auto VertexSet::full(int universe) -> VertexSet
    {
        VertexSet result(universe);
        auto w = result.words();
        for (std::size_t i = 0; i < w.size(); ++i) {
            int remaining = universe - static_cast<int>(i) * 64;
            w[i] = remaining >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << remaining) - 1);
        }
        return result;
    }

    void VertexSet::check_vertex(Vertex v) const
    {
        if (v < 0 || v >= _universe)
            throw InputError("vertex " + std::to_string(v) + " out of range [0," + std::to_string(_universe) + ")");
    }

    void VertexSet::check_universe(const VertexSet & other) const
    {
        if (other._universe != _universe)
            throw InputError("vertex sets over different universes");
    }

    void VertexSet::insert(Vertex v)
    {
        check_vertex(v);
        words()[word_of(v)] |= std::uint64_t{1} << bit_of(v);
    }

    void VertexSet::erase(Vertex v)
    {
        check_vertex(v);
        words()[word_of(v)] &= ~(std::uint64_t{1} << bit_of(v));
    }

    void VertexSet::clear()
    {
        for (auto & w : words())
            w = 0;
    }

    auto VertexSet::size() const -> int
    {
        int total = 0;
        for (auto w : words())
            total += std::popcount(w);
        return total;
    }

    auto VertexSet::empty() const -> bool
    {
        for (auto w : words())
            if (w)
                return false;
        return true;
    }

    auto VertexSet::first() const -> Vertex
    {
        auto w = words();
        for (std::size_t i = 0; i < w.size(); ++i)
            if (w[i])
                return static_cast<Vertex>(i * 64 + static_cast<std::size_t>(std::countr_zero(w[i])));
        return -1;
    }

    auto VertexSet::next(Vertex after) const -> Vertex
    {
        auto start = after + 1;
        if (start >= _universe)
            return -1;
        auto w = words();
        auto i = word_of(start);
        auto masked = w[i] & (~std::uint64_t{0} << bit_of(start));
        while (true) {
            if (masked)
                return static_cast<Vertex>(i * 64 + static_cast<std::size_t>(std::countr_zero(masked)));
            if (++i >= w.size())
                return -1;
            masked = w[i];
        }
    }

    auto VertexSet::intersects(const VertexSet & other) const -> bool
    {
        check_universe(other);
        auto a = words(), b = other.words();
        for (std::size_t i = 0; i < a.size(); ++i)
            if (a[i] & b[i])
                return true;
        return false;
    }

    auto VertexSet::is_subset_of(const VertexSet & other) const -> bool
    {
        check_universe(other);
        auto a = words(), b = other.words();
        for (std::size_t i = 0; i < a.size(); ++i)
            if (a[i] & ~b[i])
                return false;
        return true;
    }

    auto VertexSet::operator&=(const VertexSet & other) -> VertexSet &
    {
        check_universe(other);
        auto a = words();
        auto b = other.words();
        for (std::size_t i = 0; i < a.size(); ++i)
            a[i] &= b[i];
        return *this;
    }

    auto VertexSet::operator|=(const VertexSet & other) -> VertexSet &
    {
        check_universe(other);
        auto a = words();
        auto b = other.words();
        for (std::size_t i = 0; i < a.size(); ++i)
            a[i] |= b[i];
        return *this;
    }

    auto VertexSet::operator-=(const VertexSet & other) -> VertexSet &
    {
        check_universe(other);
        auto a = words();
        auto b = other.words();
        for (std::size_t i = 0; i < a.size(); ++i)
            a[i] &= ~b[i];
        return *this;
    }

    auto VertexSet::to_vector() const -> std::vector<Vertex>
    {
        std::vector<Vertex> result;
        result.reserve(static_cast<std::size_t>(size()));
        for (auto v : *this)
            result.push_back(v);
        return result;
    }

    auto VertexSet::to_string() const -> std::string
    {
        std::ostringstream out;
        out << '{';
        bool first_member = true;
        for (auto v : *this) {
            if (! first_member)
                out << ',';
            out << v;
            first_member = false;
        }
        out << '}';
        return out.str();
    }

    auto VertexSet::operator==(const VertexSet & other) const -> bool
    {
        if (_universe != other._universe)
            return false;
        auto a = words(), b = other.words();
        for (std::size_t i = 0; i < a.size(); ++i)
            if (a[i] != b[i])
                return false;
        return true;
    }
}

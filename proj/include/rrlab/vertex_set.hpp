#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <span>
#include <string>
#include <vector>

namespace rrlab
{
    using Vertex = int;

    /// A subset of {0..universe-1}. Universes of at most 64 vertices live in
    /// a single inline word; larger ones spill to a heap-allocated word array.
    class VertexSet
    {
    public:
        class Iterator
        {
        public:
            using iterator_category = std::forward_iterator_tag;
            using value_type = Vertex;
            using difference_type = std::ptrdiff_t;
            using pointer = const Vertex *;
            using reference = Vertex;

            Iterator() = default;
            Iterator(const VertexSet * set, Vertex at) : _set(set), _at(at) {}

            auto operator*() const -> Vertex { return _at; }
            auto operator++() -> Iterator &
            {
                _at = _set->next(_at);
                return *this;
            }
            auto operator++(int) -> Iterator
            {
                auto old = *this;
                ++*this;
                return old;
            }
            auto operator==(const Iterator & other) const -> bool { return _at == other._at; }

        private:
            const VertexSet * _set = nullptr;
            Vertex _at = -1;
        };

        VertexSet() = default;
        explicit VertexSet(int universe);
        VertexSet(int universe, std::initializer_list<Vertex> members);
        VertexSet(int universe, std::span<const Vertex> members);

        static auto full(int universe) -> VertexSet;

        auto universe() const -> int { return _universe; }
        auto contains(Vertex v) const -> bool
        {
            return v >= 0 && v < _universe && ((words()[word_of(v)] >> bit_of(v)) & 1u);
        }
        void insert(Vertex v);
        void erase(Vertex v);
        void clear();

        auto size() const -> int;
        auto empty() const -> bool;

        /// Smallest member, or -1 when empty.
        auto first() const -> Vertex;
        /// Smallest member strictly greater than `after`, or -1.
        auto next(Vertex after) const -> Vertex;

        auto begin() const -> Iterator { return Iterator{this, first()}; }
        auto end() const -> Iterator { return Iterator{this, -1}; }

        auto intersects(const VertexSet & other) const -> bool;
        auto is_subset_of(const VertexSet & other) const -> bool;

        auto operator&=(const VertexSet & other) -> VertexSet &;
        auto operator|=(const VertexSet & other) -> VertexSet &;
        auto operator-=(const VertexSet & other) -> VertexSet &;

        friend auto operator&(VertexSet a, const VertexSet & b) -> VertexSet { return a &= b; }
        friend auto operator|(VertexSet a, const VertexSet & b) -> VertexSet { return a |= b; }
        friend auto operator-(VertexSet a, const VertexSet & b) -> VertexSet { return a -= b; }

        auto with(Vertex v) const -> VertexSet
        {
            auto copy = *this;
            copy.insert(v);
            return copy;
        }
        auto without(Vertex v) const -> VertexSet
        {
            auto copy = *this;
            copy.erase(v);
            return copy;
        }

        auto to_vector() const -> std::vector<Vertex>;
        /// "{0,3,5}" rendering used by every text format in the project.
        auto to_string() const -> std::string;

        auto operator==(const VertexSet & other) const -> bool;

    private:
        static auto word_of(Vertex v) -> std::size_t { return static_cast<std::size_t>(v) >> 6; }
        static auto bit_of(Vertex v) -> unsigned { return static_cast<unsigned>(v) & 63u; }
        void check_vertex(Vertex v) const;
        void check_universe(const VertexSet & other) const;

        auto words() -> std::span<std::uint64_t>
        {
            return _universe <= 64 ? std::span<std::uint64_t>{&_small, 1} : std::span<std::uint64_t>{_large};
        }
        auto words() const -> std::span<const std::uint64_t>
        {
            return _universe <= 64 ? std::span<const std::uint64_t>{&_small, 1}
                                   : std::span<const std::uint64_t>{_large};
        }

        int _universe = 0;
        std::uint64_t _small = 0;
        std::vector<std::uint64_t> _large;
    };
}

#pragma once

#include <cstdint>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

namespace indlab
{
    using Vertex = unsigned;

    inline constexpr unsigned max_graph_order = 4096;

    /// Immutable simple graph on vertices 0..order-1. Adjacency is stored as
    /// one bit row per vertex, each row padded to a whole number of 64-bit
    /// words. Built through GraphBuilder, which enforces symmetry and
    /// irreflexivity.
    class Graph
    {
    public:
        using Word = std::uint64_t;
        static constexpr unsigned bits_per_word = 64;

        Graph() = default;

        auto order() const -> unsigned { return _order; }
        auto words_per_row() const -> unsigned { return _words_per_row; }

        auto adjacent(Vertex u, Vertex v) const -> bool
        {
            return (_rows[u * _words_per_row + v / bits_per_word] >> (v % bits_per_word)) & 1u;
        }

        auto row(Vertex v) const -> std::span<const Word>
        {
            return {_rows.data() + std::size_t{v} * _words_per_row, _words_per_row};
        }

        auto degree(Vertex v) const -> unsigned;
        auto edge_count() const -> std::uint64_t;
        auto neighbours(Vertex v) const -> std::vector<Vertex>;
        auto edges() const -> std::vector<std::pair<Vertex, Vertex>>;

        auto operator==(const Graph &) const -> bool = default;

    private:
        friend class GraphBuilder;

        unsigned _order = 0;
        unsigned _words_per_row = 0;
        std::vector<Word> _rows;
    };

    class GraphBuilder
    {
    public:
        explicit GraphBuilder(unsigned order);

        // Throws RangeError for out-of-range endpoints, DomainError for loops.
        auto add_edge(Vertex u, Vertex v) -> GraphBuilder &;
        auto order() const -> unsigned { return _graph._order; }
        auto adjacent(Vertex u, Vertex v) const -> bool { return _graph.adjacent(u, v); }

        auto build() && -> Graph;
        auto build() const & -> Graph;

    private:
        Graph _graph;
    };

    auto make_graph(unsigned order, std::initializer_list<std::pair<Vertex, Vertex>> edges) -> Graph;

    /// Sorted, duplicate-free set of vertex indices. Range is checked against
    /// a host graph by the operations that consume it.
    class VertexSet
    {
    public:
        VertexSet() = default;
        VertexSet(std::initializer_list<Vertex> members);
        explicit VertexSet(std::vector<Vertex> members);

        auto members() const -> std::span<const Vertex> { return _members; }
        auto size() const -> std::size_t { return _members.size(); }
        auto empty() const -> bool { return _members.empty(); }
        auto contains(Vertex v) const -> bool;
        auto begin() const { return _members.begin(); }
        auto end() const { return _members.end(); }

        auto operator==(const VertexSet &) const -> bool = default;

    private:
        std::vector<Vertex> _members;
    };

    /// Jump lengths of a circulant graph: positive, deduplicated, non-empty.
    /// The upper limit floor(n/2) depends on n and is checked by
    /// make_circulant.
    class JumpSet
    {
    public:
        JumpSet(std::initializer_list<int> jumps);
        explicit JumpSet(std::vector<int> jumps);

        auto jumps() const -> std::span<const unsigned> { return _jumps; }

    private:
        std::vector<unsigned> _jumps;
    };

    auto check_invariants(const Graph & g) -> bool;
}

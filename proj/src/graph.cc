#include <indlab/errors.hh>
#include <indlab/graph.hh>

#include <algorithm>
#include <bit>
#include <string>

namespace indlab
{
    auto Graph::degree(Vertex v) const -> unsigned
    {
        unsigned result = 0;
        for (auto w : row(v))
            result += std::popcount(w);
        return result;
    }

    auto Graph::edge_count() const -> std::uint64_t
    {
        std::uint64_t total = 0;
        for (auto w : _rows)
            total += std::popcount(w);
        return total / 2;
    }

    auto Graph::neighbours(Vertex v) const -> std::vector<Vertex>
    {
        std::vector<Vertex> result;
        auto r = row(v);
        for (unsigned i = 0; i < r.size(); ++i)
            for (Word w = r[i]; w; w &= w - 1)
                result.push_back(i * bits_per_word + std::countr_zero(w));
        return result;
    }

    auto Graph::edges() const -> std::vector<std::pair<Vertex, Vertex>>
    {
        std::vector<std::pair<Vertex, Vertex>> result;
        for (Vertex u = 0; u < _order; ++u)
            for (auto v : neighbours(u))
                if (u < v)
                    result.emplace_back(u, v);
        return result;
    }

    GraphBuilder::GraphBuilder(unsigned order)
    {
        if (order > max_graph_order)
            throw SizeError{"graph order " + std::to_string(order) + " exceeds the cap of " +
                std::to_string(max_graph_order)};
        _graph._order = order;
        _graph._words_per_row = (order + Graph::bits_per_word - 1) / Graph::bits_per_word;
        _graph._rows.assign(std::size_t{order} * _graph._words_per_row, 0);
    }

    auto GraphBuilder::add_edge(Vertex u, Vertex v) -> GraphBuilder &
    {
        if (u >= order() || v >= order())
            throw RangeError{"edge endpoint out of range"};
        if (u == v)
            throw DomainError{"self-loop on vertex " + std::to_string(u)};
        auto set = [&](Vertex a, Vertex b) {
            _graph._rows[std::size_t{a} * _graph._words_per_row + b / Graph::bits_per_word] |=
                Graph::Word{1} << (b % Graph::bits_per_word);
        };
        set(u, v);
        set(v, u);
        return *this;
    }

    auto GraphBuilder::build() && -> Graph
    {
        return std::move(_graph);
    }

    auto GraphBuilder::build() const & -> Graph
    {
        return _graph;
    }

    auto make_graph(unsigned order, std::initializer_list<std::pair<Vertex, Vertex>> edges) -> Graph
    {
        GraphBuilder builder{order};
        for (auto [u, v] : edges)
            builder.add_edge(u, v);
        return std::move(builder).build();
    }

    VertexSet::VertexSet(std::initializer_list<Vertex> members) :
        VertexSet(std::vector<Vertex>(members))
    {
    }

    VertexSet::VertexSet(std::vector<Vertex> members) :
        _members(std::move(members))
    {
        std::sort(_members.begin(), _members.end());
        if (std::adjacent_find(_members.begin(), _members.end()) != _members.end())
            throw DomainError{"vertex set contains a duplicate"};
    }

    auto VertexSet::contains(Vertex v) const -> bool
    {
        return std::binary_search(_members.begin(), _members.end(), v);
    }

    JumpSet::JumpSet(std::initializer_list<int> jumps) :
        JumpSet(std::vector<int>(jumps))
    {
    }

    JumpSet::JumpSet(std::vector<int> jumps)
    {
        if (jumps.empty())
            throw DomainError{"empty jump set"};
        for (auto j : jumps) {
            if (j <= 0)
                throw RangeError{"jump " + std::to_string(j) + " is not positive"};
            _jumps.push_back(static_cast<unsigned>(j));
        }
        std::sort(_jumps.begin(), _jumps.end());
        _jumps.erase(std::unique(_jumps.begin(), _jumps.end()), _jumps.end());
    }

    auto check_invariants(const Graph & g) -> bool
    {
        std::uint64_t degree_sum = 0;
        for (Vertex u = 0; u < g.order(); ++u) {
            if (g.adjacent(u, u))
                return false;
            for (Vertex v = u + 1; v < g.order(); ++v)
                if (g.adjacent(u, v) != g.adjacent(v, u))
                    return false;
            degree_sum += g.degree(u);
            // padding bits beyond order must stay clear
            auto r = g.row(u);
            if (! r.empty() && g.order() % Graph::bits_per_word != 0 &&
                (r.back() >> (g.order() % Graph::bits_per_word)) != 0)
                return false;
        }
        return degree_sum % 2 == 0;
    }
}

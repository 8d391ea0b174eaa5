#include <indlab/errors.hh>
#include <indlab/generators.hh>

#include <algorithm>
#include <bit>
#include <limits>
#include <string>

namespace indlab
{
    namespace
    {
        auto require_order(int n, int minimum, const char * what) -> unsigned
        {
            if (n < minimum)
                throw SizeError{std::string{what} + " needs at least " + std::to_string(minimum) +
                    " vertices, got " + std::to_string(n)};
            if (n > static_cast<int>(max_graph_order))
                throw SizeError{std::string{what} + " order exceeds cap"};
            return static_cast<unsigned>(n);
        }

        auto is_prime(int q) -> bool
        {
            if (q < 2)
                return false;
            for (int d = 2; d * d <= q; ++d)
                if (q % d == 0)
                    return false;
            return true;
        }

        class SplitMix64
        {
        public:
            explicit SplitMix64(std::uint64_t seed) :
                _state(seed)
            {
            }

            auto next() -> std::uint64_t
            {
                std::uint64_t z = (_state += 0x9e3779b97f4a7c15ULL);
                z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
                z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
                return z ^ (z >> 31);
            }

            // Unbiased draw from [0, bound) by rejection.
            auto below(std::uint64_t bound) -> std::uint64_t
            {
                auto limit = std::numeric_limits<std::uint64_t>::max() -
                    std::numeric_limits<std::uint64_t>::max() % bound;
                for (;;)
                    if (auto x = next(); x < limit)
                        return x % bound;
            }

        private:
            std::uint64_t _state;
        };
    }

    auto make_circulant(int n, const JumpSet & jumps) -> Graph
    {
        auto order = require_order(n, 3, "circulant graph");
        for (auto j : jumps.jumps())
            if (j > order / 2)
                throw RangeError{"jump " + std::to_string(j) + " exceeds floor(n/2) for n = " +
                    std::to_string(n)};

        GraphBuilder builder{order};
        for (Vertex i = 0; i < order; ++i)
            for (auto j : jumps.jumps())
                builder.add_edge(i, (i + j) % order);
        return std::move(builder).build();
    }

    auto make_dlg(int k) -> Graph
    {
        if (k < 5)
            throw DomainError{"DLG(1,2) requires k >= 5 so that 2 < k/2, got " + std::to_string(k)};
        return make_circulant(k, JumpSet{1, 2});
    }

    auto make_chain(int t) -> Graph
    {
        if (t < 0)
            throw DomainError{"chain index must be non-negative"};
        auto order = require_order(t + 3, 3, "chain graph");
        GraphBuilder builder{order};
        builder.add_edge(0, 1).add_edge(0, 2).add_edge(1, 2);
        for (Vertex m = 1; m <= static_cast<Vertex>(t); ++m)
            builder.add_edge(m + 2, m).add_edge(m + 2, m + 1);
        return std::move(builder).build();
    }

    auto make_empty(int n) -> Graph
    {
        return GraphBuilder{require_order(n, 0, "empty graph")}.build();
    }

    auto make_complete(int n) -> Graph
    {
        auto order = require_order(n, 1, "complete graph");
        GraphBuilder builder{order};
        for (Vertex u = 0; u < order; ++u)
            for (Vertex v = u + 1; v < order; ++v)
                builder.add_edge(u, v);
        return std::move(builder).build();
    }

    auto make_cycle(int n) -> Graph
    {
        return make_circulant(n, JumpSet{1});
    }

    auto make_complete_multipartite(const std::vector<int> & sizes) -> Graph
    {
        if (sizes.empty())
            throw DomainError{"complete multipartite graph needs at least one part"};
        std::vector<unsigned> part_of;
        for (unsigned p = 0; p < sizes.size(); ++p) {
            if (sizes[p] <= 0)
                throw DomainError{"part sizes must be positive"};
            part_of.insert(part_of.end(), sizes[p], p);
        }
        auto order = require_order(static_cast<int>(part_of.size()), 1, "complete multipartite graph");
        GraphBuilder builder{order};
        for (Vertex u = 0; u < order; ++u)
            for (Vertex v = u + 1; v < order; ++v)
                if (part_of[u] != part_of[v])
                    builder.add_edge(u, v);
        return std::move(builder).build();
    }

    auto make_paley(int q) -> Graph
    {
        if (! is_prime(q) || q % 4 != 1)
            throw DomainError{"Paley graph requires a prime q = 1 (mod 4), got " + std::to_string(q)};
        auto order = require_order(q, 5, "Paley graph");
        std::vector<bool> residue(order, false);
        for (unsigned x = 1; x < order; ++x)
            residue[(std::uint64_t{x} * x) % order] = true;

        GraphBuilder builder{order};
        for (Vertex u = 0; u < order; ++u)
            for (Vertex v = u + 1; v < order; ++v)
                if (residue[v - u])
                    builder.add_edge(u, v);
        return std::move(builder).build();
    }

    auto complement(const Graph & g) -> Graph
    {
        GraphBuilder builder{g.order()};
        for (Vertex u = 0; u < g.order(); ++u)
            for (Vertex v = u + 1; v < g.order(); ++v)
                if (! g.adjacent(u, v))
                    builder.add_edge(u, v);
        return std::move(builder).build();
    }

    auto blow_up(const Graph & h, const std::vector<int> & sizes) -> Graph
    {
        if (sizes.size() != h.order())
            throw DomainError{"blow-up needs one class size per vertex"};
        std::vector<Vertex> class_of;
        for (Vertex i = 0; i < h.order(); ++i) {
            if (sizes[i] <= 0)
                throw DomainError{"blow-up class sizes must be positive"};
            class_of.insert(class_of.end(), sizes[i], i);
        }
        auto order = require_order(static_cast<int>(class_of.size()), 0, "blow-up");
        GraphBuilder builder{order};
        for (Vertex u = 0; u < order; ++u)
            for (Vertex v = u + 1; v < order; ++v)
                if (class_of[u] != class_of[v] && h.adjacent(class_of[u], class_of[v]))
                    builder.add_edge(u, v);
        return std::move(builder).build();
    }

    auto iterated_blow_up(const Graph & h, int levels) -> Graph
    {
        if (levels < 1)
            throw DomainError{"iterated blow-up needs at least one level"};
        Graph current = h;
        for (int level = 1; level < levels; ++level) {
            // every vertex of h becomes a copy of the current level; copies of
            // adjacent vertices are completely joined
            auto inner = current.order();
            if (std::uint64_t{inner} * h.order() > max_graph_order)
                throw SizeError{"iterated blow-up order exceeds cap"};
            GraphBuilder builder{inner * h.order()};
            for (Vertex a = 0; a < h.order(); ++a) {
                for (Vertex u = 0; u < inner; ++u)
                    for (Vertex v = u + 1; v < inner; ++v)
                        if (current.adjacent(u, v))
                            builder.add_edge(a * inner + u, a * inner + v);
                for (Vertex b = a + 1; b < h.order(); ++b)
                    if (h.adjacent(a, b))
                        for (Vertex u = 0; u < inner; ++u)
                            for (Vertex v = 0; v < inner; ++v)
                                builder.add_edge(a * inner + u, b * inner + v);
            }
            current = std::move(builder).build();
        }
        return current;
    }

    auto induced_subgraph(const Graph & g, const VertexSet & s) -> Graph
    {
        for (auto v : s)
            if (v >= g.order())
                throw RangeError{"vertex " + std::to_string(v) + " not in host of order " +
                    std::to_string(g.order())};
        auto members = s.members();
        GraphBuilder builder{static_cast<unsigned>(members.size())};
        for (unsigned i = 0; i < members.size(); ++i)
            for (unsigned j = i + 1; j < members.size(); ++j)
                if (g.adjacent(members[i], members[j]))
                    builder.add_edge(i, j);
        return std::move(builder).build();
    }

    auto random_graph(int n, const Rational & p, std::uint64_t seed) -> Graph
    {
        if (p < 0 || p > 1)
            throw DomainError{"edge probability must lie in [0, 1]"};
        if (! p.get_den().fits_ulong_p() || ! p.get_num().fits_ulong_p())
            throw DomainError{"edge probability denominator too large"};
        auto order = require_order(n, 0, "random graph");
        auto num = p.get_num().get_ui(), den = p.get_den().get_ui();

        SplitMix64 rng{seed};
        GraphBuilder builder{order};
        for (Vertex v = 1; v < order; ++v)
            for (Vertex u = 0; u < v; ++u)
                if (rng.below(den) < num)
                    builder.add_edge(u, v);
        return std::move(builder).build();
    }

    auto permute(const Graph & g, const std::vector<Vertex> & perm) -> Graph
    {
        if (perm.size() != g.order())
            throw DomainError{"permutation length does not match graph order"};
        std::vector<bool> seen(g.order(), false);
        for (auto p : perm) {
            if (p >= g.order() || seen[p])
                throw DomainError{"not a permutation"};
            seen[p] = true;
        }
        GraphBuilder builder{g.order()};
        for (Vertex u = 0; u < g.order(); ++u)
            for (Vertex v = u + 1; v < g.order(); ++v)
                if (g.adjacent(perm[u], perm[v]))
                    builder.add_edge(u, v);
        return std::move(builder).build();
    }

    auto triangle_count(const Graph & g) -> std::uint64_t
    {
        std::uint64_t count = 0;
        for (Vertex u = 0; u < g.order(); ++u)
            for (auto v : g.neighbours(u))
                if (v > u) {
                    auto ru = g.row(u), rv = g.row(v);
                    for (unsigned w = 0; w < ru.size(); ++w)
                        count += std::popcount(ru[w] & rv[w]);
                }
        return count / 3;
    }
}

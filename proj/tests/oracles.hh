#pragma once

// Slow, obviously-correct reference implementations. They share nothing
// with the library beyond Graph::adjacent and Graph::order.

#include <indlab/graph.hh>
#include <indlab/rational.hh>

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <vector>

namespace oracle
{
    using indlab::Graph;
    using indlab::Vertex;

    // Calls f on every k-subset of 0..n-1 in lexicographic order.
    template <typename F>
    auto for_each_subset(unsigned n, unsigned k, F && f) -> void
    {
        if (k > n)
            return;
        std::vector<Vertex> s(k);
        std::iota(s.begin(), s.end(), 0u);
        while (true) {
            f(s);
            int i = static_cast<int>(k) - 1;
            while (i >= 0 && s[i] == n - k + static_cast<unsigned>(i))
                --i;
            if (i < 0)
                return;
            ++s[i];
            for (unsigned j = static_cast<unsigned>(i) + 1; j < k; ++j)
                s[j] = s[j - 1] + 1;
        }
    }

    // Does vertex i of h map to s[perm[i]] as an isomorphism onto g[s]?
    inline auto maps_onto(const Graph & h, const Graph & g, const std::vector<Vertex> & image) -> bool
    {
        for (unsigned i = 0; i < h.order(); ++i)
            for (unsigned j = i + 1; j < h.order(); ++j)
                if (h.adjacent(i, j) != g.adjacent(image[i], image[j]))
                    return false;
        return true;
    }

    // Number of injective maps V(h) -> V(g) onto s that preserve adjacency
    // and non-adjacency.
    inline auto labelled_embeddings_onto(const Graph & h, const Graph & g, std::vector<Vertex> s) -> std::uint64_t
    {
        std::sort(s.begin(), s.end());
        std::uint64_t count = 0;
        do
            count += maps_onto(h, g, s);
        while (std::next_permutation(s.begin(), s.end()));
        return count;
    }

    inline auto isomorphic(const Graph & a, const Graph & b) -> bool
    {
        if (a.order() != b.order())
            return false;
        std::vector<Vertex> all(a.order());
        std::iota(all.begin(), all.end(), 0u);
        return labelled_embeddings_onto(a, b, all) > 0;
    }

    inline auto induced_count(const Graph & h, const Graph & g) -> std::uint64_t
    {
        std::uint64_t count = 0;
        for_each_subset(g.order(), h.order(), [&](const std::vector<Vertex> & s) {
            count += labelled_embeddings_onto(h, g, s) > 0;
        });
        return count;
    }

    // All ordered tuples (t_0..t_{k-1}) with i -> t_i an isomorphism from
    // the standard double loop graph (i ~ i+-1, i+-2 mod k) onto g[t].
    inline auto dlg_labellings(const Graph & g, unsigned k) -> std::uint64_t
    {
        auto dlg_adjacent = [k](unsigned i, unsigned j) {
            unsigned d = (i > j ? i - j : j - i);
            d = std::min(d, k - d);
            return d == 1 || d == 2;
        };
        std::uint64_t count = 0;
        for_each_subset(g.order(), k, [&](std::vector<Vertex> s) {
            do {
                bool ok = true;
                for (unsigned i = 0; i < k && ok; ++i)
                    for (unsigned j = i + 1; j < k && ok; ++j)
                        ok = g.adjacent(s[i], s[j]) == dlg_adjacent(i, j);
                count += ok;
            } while (std::next_permutation(s.begin(), s.end()));
        });
        return count;
    }

    inline auto edges(const Graph & g) -> std::uint64_t
    {
        std::uint64_t m = 0;
        for (unsigned i = 0; i < g.order(); ++i)
            for (unsigned j = i + 1; j < g.order(); ++j)
                m += g.adjacent(i, j);
        return m;
    }

    inline auto choose(std::uint64_t n, std::uint64_t k) -> std::uint64_t
    {
        if (k > n)
            return 0;
        std::uint64_t r = 1;
        for (std::uint64_t i = 1; i <= k; ++i)
            r = r * (n - k + i) / i;
        return r;
    }

    // Maximum induced copies of h over all labelled graphs on n vertices,
    // by brute force over every edge set.
    inline auto max_induced(const Graph & h, unsigned n) -> std::uint64_t
    {
        std::vector<std::pair<Vertex, Vertex>> pairs;
        for (unsigned j = 1; j < n; ++j)
            for (unsigned i = 0; i < j; ++i)
                pairs.emplace_back(i, j);
        std::uint64_t best = 0;
        for (std::uint64_t code = 0; code < (std::uint64_t{1} << pairs.size()); ++code) {
            indlab::GraphBuilder b(n);
            for (std::size_t p = 0; p < pairs.size(); ++p)
                if (code >> p & 1)
                    b.add_edge(pairs[p].first, pairs[p].second);
            best = std::max(best, induced_count(h, std::move(b).build()));
        }
        return best;
    }
}

#include <indlab/isomorphism.hh>

#include <algorithm>
#include <bit>

namespace indlab
{
    namespace
    {
        struct VertexInvariant
        {
            unsigned degree;
            std::uint64_t triangles;

            auto operator<=>(const VertexInvariant &) const = default;
        };

        auto invariants(const Graph & g) -> std::vector<VertexInvariant>
        {
            std::vector<VertexInvariant> result(g.order());
            for (Vertex v = 0; v < g.order(); ++v) {
                result[v].degree = g.degree(v);
                std::uint64_t twice = 0;
                for (auto u : g.neighbours(v)) {
                    auto rv = g.row(v), ru = g.row(u);
                    for (unsigned w = 0; w < rv.size(); ++w)
                        twice += std::popcount(rv[w] & ru[w]);
                }
                result[v].triangles = twice / 2;
            }
            return result;
        }

        class Matcher
        {
        public:
            Matcher(const Graph & g, const Graph & h,
                const std::function<auto(const std::vector<Vertex> &)->bool> & visit) :
                _g(g),
                _h(h),
                _visit(visit),
                _g_inv(invariants(g)),
                _h_inv(invariants(h)),
                _mapping(g.order()),
                _used(h.order(), false)
            {
                // assign high-degree, constrained vertices first, keeping
                // each new vertex adjacent to earlier ones where possible
                std::vector<bool> placed(g.order(), false);
                for (unsigned step = 0; step < g.order(); ++step) {
                    std::optional<Vertex> best;
                    unsigned best_links = 0;
                    for (Vertex v = 0; v < g.order(); ++v) {
                        if (placed[v])
                            continue;
                        unsigned links = 0;
                        for (auto u : _order)
                            links += g.adjacent(u, v);
                        if (! best || links > best_links ||
                            (links == best_links && _g_inv[v].degree > _g_inv[*best].degree)) {
                            best = v;
                            best_links = links;
                        }
                    }
                    placed[*best] = true;
                    _order.push_back(*best);
                }
            }

            auto screen() const -> bool
            {
                if (_g.order() != _h.order() || _g.edge_count() != _h.edge_count())
                    return false;
                auto a = _g_inv, b = _h_inv;
                std::sort(a.begin(), a.end());
                std::sort(b.begin(), b.end());
                return a == b;
            }

            auto run() -> void
            {
                _stopped = false;
                search(0);
            }

        private:
            auto search(unsigned depth) -> void
            {
                if (depth == _order.size()) {
                    if (! _visit(_mapping))
                        _stopped = true;
                    return;
                }
                auto v = _order[depth];
                for (Vertex c = 0; c < _h.order() && ! _stopped; ++c) {
                    if (_used[c] || _g_inv[v] != _h_inv[c])
                        continue;
                    bool consistent = true;
                    for (unsigned d = 0; d < depth && consistent; ++d) {
                        auto u = _order[d];
                        consistent = _g.adjacent(u, v) == _h.adjacent(_mapping[u], c);
                    }
                    if (! consistent)
                        continue;
                    _mapping[v] = c;
                    _used[c] = true;
                    search(depth + 1);
                    _used[c] = false;
                }
            }

            const Graph & _g;
            const Graph & _h;
            const std::function<auto(const std::vector<Vertex> &)->bool> & _visit;
            std::vector<VertexInvariant> _g_inv, _h_inv;
            std::vector<Vertex> _order;
            std::vector<Vertex> _mapping;
            std::vector<bool> _used;
            bool _stopped = false;
        };
    }

    auto for_each_isomorphism(const Graph & g, const Graph & h,
        const std::function<auto(const std::vector<Vertex> &)->bool> & visit) -> void
    {
        Matcher matcher{g, h, visit};
        if (matcher.screen())
            matcher.run();
    }

    auto find_isomorphism(const Graph & g, const Graph & h) -> std::optional<std::vector<Vertex>>
    {
        std::optional<std::vector<Vertex>> result;
        for_each_isomorphism(g, h, [&](const std::vector<Vertex> & m) {
            result = m;
            return false;
        });
        return result;
    }

    auto are_isomorphic(const Graph & g, const Graph & h) -> bool
    {
        return find_isomorphism(g, h).has_value();
    }

    auto count_automorphisms(const Graph & g) -> std::uint64_t
    {
        std::uint64_t count = 0;
        for_each_isomorphism(g, g, [&](const std::vector<Vertex> &) {
            ++count;
            return true;
        });
        return count;
    }
}

#include <indlab/census.hh>
#include <indlab/errors.hh>
#include <indlab/graph6.hh>
#include <indlab/parallel.hh>

#include <algorithm>
#include <array>
#include <bit>
#include <numeric>

namespace indlab
{
    namespace
    {
        constexpr auto pair_bit(unsigned i, unsigned j) -> unsigned
        {
            return j * (j - 1) / 2 + i;
        }

        auto pattern_code(const Graph & h, std::span<const Vertex> perm) -> std::uint64_t
        {
            std::uint64_t code = 0;
            for (unsigned j = 1; j < perm.size(); ++j)
                for (unsigned i = 0; i < j; ++i)
                    if (h.adjacent(perm[i], perm[j]))
                        code |= std::uint64_t{1} << pair_bit(i, j);
            return code;
        }

        // Depth-first walk over the k-subsets of g whose smallest member is
        // `first`, carrying the subset code and within-subset degrees.
        // Branches where some member already has more neighbours, or more
        // non-neighbours, than any pattern vertex are cut.
        template <typename OnMatch>
        class SubsetWalker
        {
        public:
            SubsetWalker(const Graph & g, const InducedMatcher & matcher, OnMatch & on_match) :
                _g(g),
                _matcher(matcher),
                _on_match(on_match),
                _k(matcher.order()),
                _max_degree(matcher.max_degree()),
                _max_non_degree(_k - 1 - matcher.min_degree())
            {
            }

            auto walk_from(Vertex first) -> std::uint64_t
            {
                _examined = 0;
                std::array<std::uint8_t, max_pattern_order> degrees{};
                _chosen[0] = first;
                descend(1, first + 1, 0, degrees);
                return _examined;
            }

        private:
            auto descend(unsigned depth, Vertex start, std::uint64_t code,
                const std::array<std::uint8_t, max_pattern_order> & degrees) -> void
            {
                if (depth == _k) {
                    ++_examined;
                    if (_matcher.matches(code, std::span{degrees.data(), _k}))
                        _on_match(std::span<const Vertex>{_chosen.data(), _k});
                    return;
                }
                auto limit = _g.order() - (_k - depth);
                for (Vertex v = start; v <= limit; ++v) {
                    auto next_code = code;
                    auto next_degrees = degrees;
                    bool viable = true;
                    for (unsigned i = 0; i < depth; ++i)
                        if (_g.adjacent(_chosen[i], v)) {
                            next_code |= std::uint64_t{1} << pair_bit(i, depth);
                            ++next_degrees[i];
                            ++next_degrees[depth];
                            viable = viable && next_degrees[i] <= _max_degree;
                        }
                        else
                            viable = viable && depth - next_degrees[i] <= _max_non_degree;
                    // no completion can bring a member's degree into the
                    // pattern's range
                    if (! viable || next_degrees[depth] > _max_degree || depth - next_degrees[depth] > _max_non_degree)
                        continue;
                    _chosen[depth] = v;
                    descend(depth + 1, v + 1, next_code, next_degrees);
                }
            }

            const Graph & _g;
            const InducedMatcher & _matcher;
            OnMatch & _on_match;
            unsigned _k;
            unsigned _max_degree, _max_non_degree;
            std::array<Vertex, max_pattern_order> _chosen{};
            std::uint64_t _examined = 0;
        };

        auto check_count_preconditions(const Graph & h, const Graph & g) -> void
        {
            if (h.order() == 0)
                throw DomainError{"pattern must have at least one vertex"};
            if (h.order() > g.order())
                throw DomainError{"pattern order " + std::to_string(h.order()) + " exceeds host order " +
                    std::to_string(g.order())};
            if (h.order() > max_pattern_order)
                throw ResourceGuardError{"pattern order above 10 is not enumerable at desk scale"};
        }

        // Exhaustive populations: the k-subsets of an n-vertex labelled
        // graph, each as a list of (graph bit, subset bit) pairs.
        struct SubsetPlan
        {
            struct PairMap
            {
                std::uint8_t graph_bit, subset_bit, i, j;
            };
            std::vector<std::vector<PairMap>> subsets;
        };

        auto plan_subsets(unsigned n, unsigned k) -> SubsetPlan
        {
            SubsetPlan plan;
            std::vector<bool> mask(n, false);
            std::fill(mask.begin(), mask.begin() + k, true);
            // prev_permutation over a leading-true mask yields lexicographic
            // combinations
            do {
                std::vector<unsigned> members;
                for (unsigned v = 0; v < n; ++v)
                    if (mask[v])
                        members.push_back(v);
                std::vector<SubsetPlan::PairMap> pairs;
                for (unsigned j = 1; j < k; ++j)
                    for (unsigned i = 0; i < j; ++i)
                        pairs.push_back({static_cast<std::uint8_t>(pair_bit(members[i], members[j])),
                            static_cast<std::uint8_t>(pair_bit(i, j)), static_cast<std::uint8_t>(i),
                            static_cast<std::uint8_t>(j)});
                plan.subsets.push_back(std::move(pairs));
            } while (std::prev_permutation(mask.begin(), mask.end()));
            return plan;
        }

        auto count_in_code(std::uint64_t graph_code, const SubsetPlan & plan, const InducedMatcher & matcher)
            -> std::uint64_t
        {
            std::uint64_t copies = 0;
            for (auto & pairs : plan.subsets) {
                std::uint64_t code = 0;
                std::array<std::uint8_t, max_pattern_order> degrees{};
                for (auto & p : pairs)
                    if ((graph_code >> p.graph_bit) & 1u) {
                        code |= std::uint64_t{1} << p.subset_bit;
                        ++degrees[p.i];
                        ++degrees[p.j];
                    }
                copies += matcher.matches(code, std::span{degrees.data(), matcher.order()});
            }
            return copies;
        }

        struct ShardBest
        {
            std::uint64_t max_copies = 0;
            bool any = false;
            std::vector<std::string> witnesses;

            auto offer(std::uint64_t copies, std::size_t cap, const auto & make_witness) -> void
            {
                if (! any || copies > max_copies) {
                    any = true;
                    max_copies = copies;
                    witnesses.clear();
                }
                if (copies == max_copies && witnesses.size() < cap)
                    witnesses.push_back(make_witness());
            }
        };

        struct ShardOutcome
        {
            std::vector<ShardBest> per_pattern;
            std::uint64_t examined = 0;
        };

        auto merge(std::vector<ShardOutcome> outcomes, std::size_t patterns, std::size_t cap, const std::string & name)
            -> std::vector<SearchResult>
        {
            std::vector<SearchResult> results(patterns);
            std::uint64_t examined = 0;
            for (auto & o : outcomes)
                examined += o.examined;
            for (std::size_t p = 0; p < patterns; ++p) {
                auto & r = results[p];
                r.population = name;
                r.graphs_examined = examined;
                bool any = false;
                for (auto & o : outcomes)
                    if (o.per_pattern[p].any && (! any || o.per_pattern[p].max_copies > r.max_copies)) {
                        any = true;
                        r.max_copies = o.per_pattern[p].max_copies;
                    }
                for (auto & o : outcomes) {
                    auto & best = o.per_pattern[p];
                    if (! best.any || best.max_copies != r.max_copies)
                        continue;
                    for (auto & w : best.witnesses)
                        if (r.witnesses.size() < cap)
                            r.witnesses.push_back(std::move(w));
                }
            }
            return results;
        }
    }

    InducedMatcher::InducedMatcher(const Graph & pattern) :
        _order(pattern.order())
    {
        if (_order == 0 || _order > max_pattern_order)
            throw DomainError{"pattern order must be between 1 and 10"};
        for (Vertex v = 0; v < _order; ++v) {
            _sorted_degrees.push_back(static_cast<std::uint8_t>(pattern.degree(v)));
            std::uint16_t r = 0;
            for (Vertex u = 0; u < _order; ++u)
                if (pattern.adjacent(v, u))
                    r |= std::uint16_t(1u << u);
            _rows.push_back(r);
        }
        std::sort(_sorted_degrees.begin(), _sorted_degrees.end());

        if (_order <= 7) {
            _table.assign(std::size_t{1} << (_order * (_order - 1) / 2), false);
            std::vector<Vertex> perm(_order);
            std::iota(perm.begin(), perm.end(), 0);
            do
                _table[pattern_code(pattern, perm)] = true;
            while (std::next_permutation(perm.begin(), perm.end()));
        }
    }

    auto InducedMatcher::matches(std::uint64_t code, std::span<const std::uint8_t> degrees) const -> bool
    {
        std::array<std::uint8_t, max_pattern_order> sorted{};
        std::copy(degrees.begin(), degrees.end(), sorted.begin());
        std::sort(sorted.begin(), sorted.begin() + _order);
        if (! std::equal(_sorted_degrees.begin(), _sorted_degrees.end(), sorted.begin()))
            return false;
        if (! _table.empty())
            return _table[code];
        return backtrack_match(code);
    }

    auto InducedMatcher::backtrack_match(std::uint64_t code) const -> bool
    {
        std::array<std::uint16_t, max_pattern_order> rows{};
        for (unsigned j = 1; j < _order; ++j)
            for (unsigned i = 0; i < j; ++i)
                if ((code >> pair_bit(i, j)) & 1u) {
                    rows[i] |= std::uint16_t(1u << j);
                    rows[j] |= std::uint16_t(1u << i);
                }

        std::array<unsigned, max_pattern_order> image{};
        std::uint16_t used = 0;
        auto extend = [&](auto & self, unsigned v) -> bool {
            if (v == _order)
                return true;
            for (unsigned c = 0; c < _order; ++c) {
                if ((used >> c) & 1u)
                    continue;
                if (std::popcount(rows[v]) != std::popcount(_rows[c]))
                    continue;
                bool ok = true;
                for (unsigned u = 0; u < v && ok; ++u)
                    ok = ((rows[v] >> u) & 1u) == ((_rows[c] >> image[u]) & 1u);
                if (! ok)
                    continue;
                image[v] = c;
                used |= std::uint16_t(1u << c);
                if (self(self, v + 1))
                    return true;
                used &= std::uint16_t(~(1u << c));
            }
            return false;
        };
        return extend(extend, 0);
    }

    auto count_induced(const Graph & h, const Graph & g, unsigned workers) -> CountResult
    {
        check_count_preconditions(h, g);
        InducedMatcher matcher{h};
        auto shards = g.order() - h.order() + 1;

        struct Partial
        {
            std::uint64_t copies = 0, examined = 0;
        };
        auto partials = run_shards<Partial>(shards, workers, [&](std::size_t first) {
            Partial p;
            auto on_match = [&](std::span<const Vertex>) { ++p.copies; };
            SubsetWalker walker{g, matcher, on_match};
            p.examined = walker.walk_from(static_cast<Vertex>(first));
            return p;
        });

        CountResult result;
        for (auto & p : partials) {
            result.copies += p.copies;
            result.subsets_examined += p.examined;
        }
        result.density = make_rational(result.copies, binomial(g.order(), h.order()));
        return result;
    }

    auto density(const Graph & h, const Graph & g, unsigned workers) -> Rational
    {
        return count_induced(h, g, workers).density;
    }

    auto induced_copies(const Graph & h, const Graph & g, unsigned workers) -> std::vector<VertexSet>
    {
        check_count_preconditions(h, g);
        InducedMatcher matcher{h};
        auto shards = g.order() - h.order() + 1;
        auto found = run_shards<std::vector<VertexSet>>(shards, workers, [&](std::size_t first) {
            std::vector<VertexSet> copies;
            auto on_match = [&](std::span<const Vertex> s) {
                copies.emplace_back(std::vector<Vertex>(s.begin(), s.end()));
            };
            SubsetWalker walker{g, matcher, on_match};
            walker.walk_from(static_cast<Vertex>(first));
            return copies;
        });

        std::vector<VertexSet> result;
        for (auto & f : found)
            result.insert(result.end(), std::make_move_iterator(f.begin()), std::make_move_iterator(f.end()));
        return result;
    }

    auto describe(const Population & population) -> std::string
    {
        if (auto e = std::get_if<ExhaustiveLabeled>(&population))
            return "exhaustive-labeled(" + std::to_string(e->n) + ")";
        return "corpus:" + std::get<Corpus>(population).name;
    }

    auto graph_from_code(unsigned n, std::uint64_t code) -> Graph
    {
        GraphBuilder builder{n};
        for (unsigned j = 1; j < n; ++j)
            for (unsigned i = 0; i < j; ++i)
                if ((code >> pair_bit(i, j)) & 1u)
                    builder.add_edge(i, j);
        return std::move(builder).build();
    }

    auto extremal_search(std::span<const Graph> patterns, const Population & population,
        const SearchOptions & options) -> std::vector<SearchResult>
    {
        std::vector<InducedMatcher> matchers;
        for (auto & h : patterns) {
            if (h.order() == 0 || h.order() > max_pattern_order)
                throw DomainError{"pattern order must be between 1 and 10"};
            matchers.emplace_back(h);
        }
        auto name = describe(population);
        auto cap = options.witness_cap;

        if (auto e = std::get_if<ExhaustiveLabeled>(&population)) {
            auto n = e->n;
            if (n > max_exhaustive_order)
                throw ResourceGuardError{"exhaustive search over all labelled graphs is limited to n <= 7; "
                                         "use a graph6 corpus for larger orders"};
            std::vector<SubsetPlan> plans;
            for (auto & h : patterns) {
                if (h.order() > n)
                    throw DomainError{"pattern order exceeds population order"};
                plans.push_back(plan_subsets(n, h.order()));
            }

            auto bits = n * (n - (n > 0 ? 1 : 0)) / 2;
            std::uint64_t total = std::uint64_t{1} << bits;
            std::uint64_t shards = std::min<std::uint64_t>(total, 256);
            auto outcomes = run_shards<ShardOutcome>(shards, options.workers, [&](std::size_t s) {
                ShardOutcome o;
                o.per_pattern.resize(patterns.size());
                auto begin = total / shards * s, end = total / shards * (s + 1);
                for (auto code = begin; code < end; ++code) {
                    ++o.examined;
                    for (std::size_t p = 0; p < patterns.size(); ++p)
                        o.per_pattern[p].offer(count_in_code(code, plans[p], matchers[p]), cap,
                            [&] { return encode_graph6(graph_from_code(n, code)); });
                }
                return o;
            });
            return merge(std::move(outcomes), patterns.size(), cap, name);
        }

        auto & corpus = std::get<Corpus>(population);
        std::size_t shards = std::min<std::size_t>(corpus.graphs.size(), 64);
        auto outcomes = run_shards<ShardOutcome>(shards, options.workers, [&](std::size_t s) {
            ShardOutcome o;
            o.per_pattern.resize(patterns.size());
            auto size = corpus.graphs.size();
            for (auto i = size * s / shards; i < size * (s + 1) / shards; ++i) {
                auto & g = corpus.graphs[i];
                ++o.examined;
                for (std::size_t p = 0; p < patterns.size(); ++p) {
                    // graphs smaller than the pattern hold zero copies
                    std::uint64_t copies = patterns[p].order() <= g.order() ? count_induced(patterns[p], g).copies : 0;
                    o.per_pattern[p].offer(copies, cap, [&] { return encode_graph6(g); });
                }
            }
            return o;
        });
        return merge(std::move(outcomes), patterns.size(), cap, name);
    }

    auto extremal_search(const Graph & h, const Population & population, const SearchOptions & options)
        -> SearchResult
    {
        return extremal_search(std::span{&h, 1}, population, options).front();
    }

    auto density_sequence(const Graph & h, unsigned n_lo, unsigned n_hi, const SearchOptions & options)
        -> std::vector<std::pair<unsigned, Rational>>
    {
        if (n_lo < h.order())
            throw DomainError{"density sequence must start at n >= order of the pattern"};
        if (n_hi > max_exhaustive_order)
            throw ResourceGuardError{"density sequence limited to n <= 7"};

        std::vector<std::pair<unsigned, Rational>> sequence;
        for (auto n = n_lo; n <= n_hi; ++n) {
            auto best = extremal_search(h, ExhaustiveLabeled{n}, options);
            auto value = make_rational(best.max_copies, binomial(n, h.order()));
            if (! sequence.empty() && value > sequence.back().second)
                throw VerificationError{"I(H,n) increased from n = " + std::to_string(n - 1) + " to n = " +
                    std::to_string(n) + ": " + to_string(sequence.back().second) + " < " + to_string(value)};
            sequence.emplace_back(n, value);
        }
        return sequence;
    }

    auto construction_count_k6(int m) -> BigInt
    {
        if (m < 2)
            throw DomainError{"K_{m,m,m} construction needs m >= 2"};
        return power(binomial(static_cast<unsigned long>(m), 2), 3);
    }

    auto bipartite_count(int rho, int n, bool odd) -> BigInt
    {
        if (rho < 1)
            throw DomainError{"rho must be at least 1"};
        if (n < 2 * rho + (odd ? 1 : 0))
            throw DomainError{"n too small for the complete bipartite pattern"};
        auto r = static_cast<unsigned long>(rho);
        auto hi = static_cast<unsigned long>((n + 1) / 2), lo = static_cast<unsigned long>(n / 2);
        if (! odd)
            return binomial(hi, r) * binomial(lo, r);
        return binomial(hi, r) * binomial(lo, r + 1) + binomial(lo, r) * binomial(hi, r + 1);
    }
}

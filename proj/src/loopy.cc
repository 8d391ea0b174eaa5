#include <indlab/census.hh>
#include <indlab/errors.hh>
#include <indlab/generators.hh>
#include <indlab/isomorphism.hh>
#include <indlab/loopy.hh>
#include <indlab/parallel.hh>

#include <algorithm>
#include <map>

namespace indlab
{
    namespace
    {
        auto require_k(int k) -> void
        {
            if (k < 5)
                throw DomainError{"loopy tuples need k >= 5, got " + std::to_string(k)};
        }

        auto check_vertices(const Graph & g, const OrderedTuple & t) -> void
        {
            for (auto v : t.vertices())
                if (v >= g.order())
                    throw RangeError{"tuple vertex " + std::to_string(v) + " outside host of order " +
                        std::to_string(g.order())};
        }

        // Positions among v_0..v_{i-1} that the vertex placed at step i must
        // be adjacent to, and the only ones it may be adjacent to. Step 0
        // has no constraint.
        auto required_neighbours(unsigned i, unsigned k, TupleMode mode) -> std::vector<unsigned>
        {
            if (i == 0)
                return {};
            if (i == 1)
                return {0};
            if (i == 2)
                return {0, 1};
            if (i == k - 1)
                return {0, 1, k - 3, k - 2};
            if (i == k - 2 && mode == TupleMode::amended)
                return {0, i - 2, i - 1};
            return {i - 2, i - 1};
        }

        auto fits_step(const Graph & g, std::span<const Vertex> prefix, Vertex v, unsigned k, TupleMode mode) -> bool
        {
            auto i = static_cast<unsigned>(prefix.size());
            if (i == 0)
                return true;
            auto required = required_neighbours(i, k, mode);
            auto next = required.begin();
            for (unsigned p = 0; p < i; ++p) {
                if (prefix[p] == v)
                    return false;
                bool wanted = next != required.end() && *next == p;
                if (wanted)
                    ++next;
                if (g.adjacent(prefix[p], v) != wanted)
                    return false;
            }
            return true;
        }

        auto induces_dlg(const Graph & g, std::span<const Vertex> tuple, const Graph & dlg) -> bool
        {
            GraphBuilder builder{static_cast<unsigned>(tuple.size())};
            for (unsigned i = 0; i < tuple.size(); ++i)
                for (unsigned j = i + 1; j < tuple.size(); ++j)
                    if (g.adjacent(tuple[i], tuple[j]))
                        builder.add_edge(i, j);
            return are_isomorphic(std::move(builder).build(), dlg);
        }

        auto on_track(const Graph & g, const OrderedTuple & t, unsigned k, TupleMode mode) -> bool
        {
            auto v = t.vertices();
            for (unsigned i = 0; i < v.size(); ++i)
                if (! fits_step(g, v.first(i), v[i], k, mode))
                    return false;
            return true;
        }

        auto candidates(const Graph & g, std::span<const Vertex> prefix, unsigned k, TupleMode mode,
            const Graph & dlg) -> std::vector<Vertex>
        {
            std::vector<Vertex> result;
            std::vector<Vertex> completed(prefix.begin(), prefix.end());
            completed.push_back(0);
            for (Vertex v = 0; v < g.order(); ++v) {
                if (! fits_step(g, prefix, v, k, mode))
                    continue;
                if (prefix.size() == k - 1) {
                    completed.back() = v;
                    if (! induces_dlg(g, completed, dlg))
                        continue;
                }
                result.push_back(v);
            }
            return result;
        }

        auto is_dlg_labelling(const Graph & g, const OrderedTuple & t) -> bool
        {
            auto k = t.size();
            for (std::size_t i = 0; i < k; ++i)
                for (std::size_t j = i + 1; j < k; ++j) {
                    auto diff = std::min(j - i, k - (j - i));
                    if (g.adjacent(t[i], t[j]) != (diff == 1 || diff == 2))
                        return false;
                }
            return true;
        }
    }

    auto to_string(TupleMode mode) -> std::string
    {
        return mode == TupleMode::strict ? "strict" : "amended";
    }

    auto parse_tuple_mode(const std::string & text) -> TupleMode
    {
        if (text == "strict")
            return TupleMode::strict;
        if (text == "amended")
            return TupleMode::amended;
        throw ParseError{"unknown tuple mode '" + text + "' (expected strict or amended)"};
    }

    OrderedTuple::OrderedTuple(std::initializer_list<Vertex> vertices) :
        OrderedTuple(std::vector<Vertex>(vertices))
    {
    }

    OrderedTuple::OrderedTuple(std::vector<Vertex> vertices) :
        _vertices(std::move(vertices))
    {
        auto sorted = _vertices;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw DomainError{"ordered tuple repeats a vertex"};
    }

    auto OrderedTuple::appended(Vertex v) const -> OrderedTuple
    {
        auto copy = _vertices;
        copy.push_back(v);
        return OrderedTuple{std::move(copy)};
    }

    auto OrderedTuple::reversed() const -> OrderedTuple
    {
        return OrderedTuple{std::vector<Vertex>(_vertices.rbegin(), _vertices.rend())};
    }

    auto OrderedTuple::rotated(std::size_t j) const -> OrderedTuple
    {
        std::vector<Vertex> result;
        for (std::size_t i = 0; i < _vertices.size(); ++i)
            result.push_back(_vertices[(i + j) % _vertices.size()]);
        return OrderedTuple{std::move(result)};
    }

    auto is_good_tuple(const Graph & g, const OrderedTuple & t) -> bool
    {
        check_vertices(g, t);
        auto l = t.size();
        if (l <= 3) {
            for (std::size_t i = 0; i < l; ++i)
                for (std::size_t j = i + 1; j < l; ++j)
                    if (! g.adjacent(t[i], t[j]))
                        return false;
            return true;
        }

        auto chain = make_chain(static_cast<int>(l - 3));
        for (Vertex i = 0; i < l; ++i)
            for (Vertex j = i + 1; j < l; ++j)
                if (g.adjacent(t[i], t[j]) != chain.adjacent(i, j))
                    return false;
        auto v = t.vertices();
        return is_good_tuple(g, OrderedTuple{std::vector<Vertex>(v.begin(), v.end() - 1)});
    }

    auto is_good_tuple_incremental(const Graph & g, const OrderedTuple & t) -> bool
    {
        check_vertices(g, t);
        auto v = t.vertices();
        for (std::size_t m = 1; m < v.size(); ++m)
            for (std::size_t p = 0; p < m; ++p) {
                bool wanted = m - p <= 2;
                if (g.adjacent(v[p], v[m]) != wanted)
                    return false;
            }
        return true;
    }

    auto extend_candidates(const Graph & g, const OrderedTuple & prefix, int k, TupleMode mode) -> VertexSet
    {
        require_k(k);
        check_vertices(g, prefix);
        if (prefix.size() >= static_cast<std::size_t>(k))
            throw ContractError{"prefix already has k vertices"};
        if (! on_track(g, prefix, k, mode))
            throw ContractError{"prefix is not a good prefix under " + to_string(mode) + " mode"};
        return VertexSet{candidates(g, prefix.vertices(), k, mode, make_dlg(k))};
    }

    auto is_loopy(const Graph & g, const OrderedTuple & t, int k, TupleMode mode) -> bool
    {
        require_k(k);
        check_vertices(g, t);
        if (t.size() != static_cast<std::size_t>(k) || ! on_track(g, t, k, mode))
            return false;
        return induces_dlg(g, t.vertices(), make_dlg(k));
    }

    auto enumerate_loopy(const Graph & g, int k, TupleMode mode, unsigned workers) -> std::vector<OrderedTuple>
    {
        require_k(k);
        if (g.order() < static_cast<unsigned>(k))
            return {};
        auto dlg = make_dlg(k);
        auto target = static_cast<unsigned>(k);

        auto found = run_shards<std::vector<OrderedTuple>>(g.order(), workers, [&](std::size_t first) {
            std::vector<OrderedTuple> out;
            std::vector<Vertex> prefix{static_cast<Vertex>(first)};
            auto descend = [&](auto & self) -> void {
                if (prefix.size() == target) {
                    out.emplace_back(prefix);
                    return;
                }
                for (auto v : candidates(g, prefix, target, mode, dlg)) {
                    prefix.push_back(v);
                    self(self);
                    prefix.pop_back();
                }
            };
            descend(descend);
            return out;
        });

        std::vector<OrderedTuple> result;
        for (auto & f : found)
            result.insert(result.end(), std::make_move_iterator(f.begin()), std::make_move_iterator(f.end()));
        return result;
    }

    auto tuple_probability(const Graph & g, const OrderedTuple & d, TupleMode mode) -> ProbabilityTrace
    {
        auto k = static_cast<int>(d.size());
        if (k < 5 || ! is_loopy(g, d, k, mode))
            throw ContractError{"tuple is not a loopy k-tuple under " + to_string(mode) + " mode"};

        auto dlg = make_dlg(k);
        ProbabilityTrace trace;
        trace.probability = 1;
        auto v = d.vertices();
        for (unsigned i = 0; i < v.size(); ++i) {
            auto n_i = candidates(g, v.first(i), static_cast<unsigned>(k), mode, dlg).size();
            trace.step_counts.push_back(n_i);
            trace.probability /= Rational{static_cast<unsigned long>(n_i)};
        }
        return trace;
    }

    auto lemma_sum(const Graph & g, int k, TupleMode mode, unsigned workers) -> LemmaReport
    {
        LemmaReport report;
        report.sum = 0;
        for (auto & t : enumerate_loopy(g, k, mode, workers)) {
            report.sum += tuple_probability(g, t, mode).probability;
            ++report.loopy_count;
        }
        report.holds = report.sum <= 1;
        return report;
    }

    auto cyclic_labelling(const Graph & g, const VertexSet & copy) -> OrderedTuple
    {
        auto k = static_cast<int>(copy.size());
        require_k(k);
        auto mapping = find_isomorphism(make_dlg(k), induced_subgraph(g, copy));
        if (! mapping)
            throw DomainError{"vertex set does not induce DLG(1,2)"};
        std::vector<Vertex> labelling;
        for (auto m : *mapping)
            labelling.push_back(copy.members()[m]);
        return OrderedTuple{std::move(labelling)};
    }

    auto rotation_bound_check(const Graph & g, const OrderedTuple & copy_labelling, TupleMode mode) -> RotationReport
    {
        auto k = static_cast<int>(copy_labelling.size());
        require_k(k);
        check_vertices(g, copy_labelling);
        if (! is_dlg_labelling(g, copy_labelling))
            throw DomainError{"labelling is not a cyclic DLG(1,2) labelling of an induced copy"};

        RotationReport report;
        report.k = k;
        report.n = g.order();
        report.forward_sum = 0;
        report.total_sum = 0;

        auto probability = [&](const OrderedTuple & t) -> Rational {
            if (! is_loopy(g, t, k, mode)) {
                ++report.non_loopy_rotations;
                return 0;
            }
            return tuple_probability(g, t, mode).probability;
        };
        for (int j = 0; j < k; ++j) {
            auto forward = copy_labelling.rotated(j);
            auto p = probability(forward);
            report.forward_sum += p;
            report.total_sum += p + probability(forward.reversed());
        }

        auto kk = power(k, k), nk = power(g.order(), k);
        report.forward_threshold = make_rational(kk, 54 * nk);
        report.total_threshold = make_rational(kk, 27 * nk);
        report.forward_holds = report.forward_sum >= report.forward_threshold;
        report.total_holds = report.total_sum >= report.total_threshold;
        report.definitional_degeneracy = report.non_loopy_rotations == 2u * k;
        return report;
    }

    auto correspondence_check(const Graph & g, int k, unsigned workers) -> CorrespondenceReport
    {
        if (k < 6)
            throw DomainError{"correspondence check needs k >= 6; at k = 5 every ordering of a K5 is loopy"};

        CorrespondenceReport report;
        report.k = k;
        std::vector<VertexSet> copies;
        if (g.order() >= static_cast<unsigned>(k))
            copies = induced_copies(make_dlg(k), g, workers);
        auto loopy = enumerate_loopy(g, k, TupleMode::amended, workers);

        report.copy_count = copies.size();
        report.loopy_count = loopy.size();
        report.expected = 2u * k * report.copy_count;
        report.equal = report.loopy_count == report.expected;
        report.automorphisms = count_automorphisms(make_dlg(k));
        report.matches_automorphism_count = report.loopy_count == report.automorphisms * report.copy_count;

        std::map<std::vector<Vertex>, std::uint64_t> per_copy;
        for (auto & c : copies)
            per_copy[std::vector<Vertex>(c.begin(), c.end())] = 0;
        for (auto & t : loopy) {
            std::vector<Vertex> key(t.vertices().begin(), t.vertices().end());
            std::sort(key.begin(), key.end());
            ++per_copy[key];
        }
        for (auto & [members, count] : per_copy)
            if (count != 2u * k)
                report.offending_copies.emplace_back(members);
        return report;
    }

    auto theorem_bound_check(const Graph & g, int k, unsigned workers) -> TheoremReport
    {
        require_k(k);
        TheoremReport report;
        report.k = k;
        report.n = g.order();
        if (g.order() >= static_cast<unsigned>(k))
            report.copies = count_induced(make_dlg(k), g, workers).copies;
        report.bound = make_rational(27 * power(g.order(), k), power(k, k));
        report.slack = report.bound - Rational{report.copies};
        report.holds = Rational{report.copies} <= report.bound;
        return report;
    }
}

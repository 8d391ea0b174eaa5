#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hh"

#include <indlab/census.hh>
#include <indlab/errors.hh>
#include <indlab/generators.hh>
#include <indlab/isomorphism.hh>
#include <indlab/loopy.hh>

using namespace indlab;

namespace
{
    auto identity_tuple(unsigned k) -> OrderedTuple
    {
        std::vector<Vertex> v(k);
        std::iota(v.begin(), v.end(), 0u);
        return OrderedTuple{v};
    }

    // Candidate counts straight from the step rules, for the probability
    // oracle: previous members adjacent to the new vertex must be exactly
    // the listed positions.
    auto oracle_probability(const Graph & g, const OrderedTuple & t) -> Rational
    {
        unsigned k = static_cast<unsigned>(t.size());
        auto required = [k](unsigned i) -> std::vector<unsigned> {
            if (i == k - 1)
                return {0, 1, k - 3, k - 2};
            if (i == k - 2)
                return {0, i - 2, i - 1};
            return {i - 2, i - 1};
        };
        Rational p = make_rational(1, g.order());
        for (unsigned i = 1; i < k; ++i) {
            std::uint64_t n = 0;
            for (Vertex v = 0; v < g.order(); ++v) {
                bool used = false;
                for (unsigned j = 0; j < i; ++j)
                    used = used || t[j] == v;
                if (used)
                    continue;
                bool ok = true;
                if (i == 1)
                    ok = g.adjacent(v, t[0]);
                else if (i == 2)
                    ok = g.adjacent(v, t[0]) && g.adjacent(v, t[1]);
                else {
                    auto req = required(i);
                    for (unsigned j = 0; j < i; ++j)
                        ok = ok && g.adjacent(v, t[j]) == (std::find(req.begin(), req.end(), j) != req.end());
                }
                n += ok;
            }
            p /= n;
        }
        return p;
    }
}

TEST_CASE("ordered tuples")
{
    CHECK_THROWS_AS(OrderedTuple({1, 2, 1}), DomainError);
    OrderedTuple t{3, 1, 2};
    CHECK(t.reversed() == OrderedTuple{2, 1, 3});
    CHECK(t.rotated(1) == OrderedTuple{1, 2, 3});
    CHECK(t.appended(0) == OrderedTuple{3, 1, 2, 0});
    CHECK_THROWS_AS(t.appended(1), DomainError);
    CHECK(to_string(parse_tuple_mode("strict")) == "strict");
    CHECK_THROWS(parse_tuple_mode("lenient"));
}

TEST_CASE("good tuples")
{
    auto k3 = make_complete(3);
    CHECK(is_good_tuple(k3, OrderedTuple{2, 0, 1}));
    CHECK(is_good_tuple(k3, OrderedTuple{1, 2, 0}));
    auto dlg = make_dlg(6);
    CHECK(is_good_tuple(dlg, OrderedTuple{0, 1, 2, 3}));
    CHECK_FALSE(is_good_tuple(dlg, OrderedTuple{0, 1, 2, 4}));

    // both definitions agree on every tuple of length <= 5 in a few hosts
    for (auto & g : {make_dlg(7), make_chain(4), random_graph(7, make_rational(3, 5), 2)}) {
        oracle::for_each_subset(g.order(), 5, [&](std::vector<Vertex> s) {
            do
                for (std::size_t len = 1; len <= 5; ++len) {
                    OrderedTuple t{std::vector<Vertex>(s.begin(), s.begin() + static_cast<long>(len))};
                    CHECK(is_good_tuple(g, t) == is_good_tuple_incremental(g, t));
                }
            while (std::next_permutation(s.begin(), s.end()));
        });
    }
}

TEST_CASE("extension candidates")
{
    auto dlg = make_dlg(6);
    CHECK(extend_candidates(dlg, OrderedTuple{0, 1, 2}, 6, TupleMode::amended) == VertexSet{3});
    CHECK(extend_candidates(dlg, OrderedTuple{0, 1, 2, 3}, 6, TupleMode::amended) == VertexSet{4});
    CHECK(extend_candidates(dlg, OrderedTuple{0, 1, 2, 3}, 6, TupleMode::strict).empty());
    CHECK(extend_candidates(make_complete(5), OrderedTuple{std::vector<Vertex>{}}, 5, TupleMode::amended) ==
        VertexSet{0, 1, 2, 3, 4});
    CHECK_THROWS_AS(extend_candidates(dlg, OrderedTuple{0, 3}, 6, TupleMode::amended), ContractError);
}

TEST_CASE("enumeration on the octahedron")
{
    auto dlg = make_dlg(6);
    CHECK(enumerate_loopy(dlg, 6, TupleMode::strict).empty());
    auto amended = enumerate_loopy(dlg, 6, TupleMode::amended);
    // one tuple per labelled isomorphism from DLG(1,2), i.e. |Aut| = 48
    CHECK(amended.size() == oracle::dlg_labellings(dlg, 6));
    CHECK(amended.size() == 48);
    CHECK(std::is_sorted(amended.begin(), amended.end()));
    CHECK(enumerate_loopy(make_cycle(6), 6, TupleMode::amended).empty());
    CHECK(enumerate_loopy(make_cycle(5), 6, TupleMode::amended).empty());
}

TEST_CASE("amended loopy tuples are exactly the labelled copies")
{
    for (std::uint64_t seed = 0; seed < 6; ++seed) {
        auto g = random_graph(10, make_rational(seed % 2 ? 4 : 3, 5), seed);
        for (int k : {5, 6, 7}) {
            auto tuples = enumerate_loopy(g, k, TupleMode::amended);
            CHECK(tuples.size() == oracle::dlg_labellings(g, static_cast<unsigned>(k)));
            CHECK(enumerate_loopy(g, k, TupleMode::amended, 4).size() == tuples.size());
            for (auto & t : tuples)
                CHECK(is_loopy(g, t, k, TupleMode::amended));
            if (k >= 6)
                CHECK(enumerate_loopy(g, k, TupleMode::strict).empty());
        }
    }
}

TEST_CASE("tuple probabilities")
{
    auto dlg = make_dlg(6);
    auto trace = tuple_probability(dlg, identity_tuple(6), TupleMode::amended);
    CHECK(trace.step_counts == std::vector<std::uint64_t>{6, 4, 2, 1, 1, 1});
    CHECK(trace.probability == make_rational(1, 48));
    CHECK_THROWS_AS(tuple_probability(dlg, identity_tuple(6), TupleMode::strict), ContractError);

    for (std::uint64_t seed = 0; seed < 8; ++seed) {
        auto g = random_graph(11, make_rational(7, 10), seed);
        for (auto & t : enumerate_loopy(g, 6, TupleMode::amended)) {
            auto tr = tuple_probability(g, t, TupleMode::amended);
            CHECK(tr.probability == oracle_probability(g, t));
            CHECK(tr.step_counts[0] == g.order());
            CHECK(tr.probability > 0);
            CHECK(tr.probability <= 1);
        }
    }
}

TEST_CASE("lemma sums")
{
    auto dlg = make_dlg(6);
    auto r = lemma_sum(dlg, 6, TupleMode::amended);
    CHECK(r.loopy_count == 48);
    CHECK(r.sum == 1);
    CHECK(r.holds);
    CHECK(lemma_sum(make_cycle(8), 6, TupleMode::amended).sum == 0);
    CHECK(lemma_sum(make_cycle(8), 6, TupleMode::strict).sum == 0);

    for (std::uint64_t seed = 0; seed < 25; ++seed) {
        auto g = random_graph(12, make_rational(seed % 3 == 0 ? 3 : seed % 3 == 1 ? 5 : 8, 10), seed);
        for (int k : {6, 7}) {
            auto l = lemma_sum(g, k, TupleMode::amended);
            CHECK(l.sum <= 1);
            CHECK(l.holds);
        }
    }
}

TEST_CASE("rotation sums on the octahedron")
{
    auto dlg = make_dlg(6);
    auto r = rotation_bound_check(dlg, identity_tuple(6), TupleMode::amended);
    CHECK(r.forward_sum == make_rational(1, 8));
    CHECK(r.total_sum == make_rational(1, 4));
    CHECK(r.forward_threshold == make_rational(1, 54));
    CHECK(r.total_threshold == make_rational(1, 27));
    CHECK(r.forward_holds);
    CHECK(r.total_holds);
    CHECK_FALSE(r.definitional_degeneracy);

    auto s = rotation_bound_check(dlg, identity_tuple(6), TupleMode::strict);
    CHECK(s.forward_sum == 0);
    CHECK(s.total_sum == 0);
    CHECK_FALSE(s.forward_holds);
    CHECK_FALSE(s.total_holds);
    CHECK(s.definitional_degeneracy);

    CHECK_THROWS_AS(rotation_bound_check(dlg, OrderedTuple{0, 2, 1, 3, 4, 5}, TupleMode::amended), DomainError);
}

TEST_CASE("cyclic labellings and rotations across random hosts")
{
    auto dlg6 = make_dlg(6);
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        auto g = random_graph(12, make_rational(4, 5), seed);
        for (auto & copy : induced_copies(dlg6, g)) {
            auto t = cyclic_labelling(g, copy);
            for (unsigned i = 0; i < 6; ++i) {
                CHECK(g.adjacent(t[i], t[(i + 1) % 6]));
                CHECK(g.adjacent(t[i], t[(i + 2) % 6]));
                CHECK_FALSE(g.adjacent(t[i], t[(i + 3) % 6]));
            }
            auto r = rotation_bound_check(g, t, TupleMode::amended);
            CHECK(r.forward_holds);
            CHECK(r.total_holds);
            CHECK(r.total_sum >= r.forward_sum);
        }
    }
    CHECK_THROWS_AS(cyclic_labelling(make_cycle(6), VertexSet{0, 1, 2, 3, 4, 5}), DomainError);
}

TEST_CASE("correspondence between loopy tuples and copies")
{
    auto dlg = make_dlg(6);
    auto own = correspondence_check(dlg, 6);
    CHECK(own.copy_count == 1);
    CHECK(own.loopy_count == 48);
    CHECK(own.expected == 12);
    CHECK_FALSE(own.equal);
    CHECK(own.automorphisms == 48);
    CHECK(own.matches_automorphism_count);

    auto k333 = make_complete_multipartite({3, 3, 3});
    auto r = correspondence_check(k333, 6);
    CHECK(r.copy_count == 27);
    CHECK(r.loopy_count == oracle::dlg_labellings(k333, 6));
    CHECK(r.loopy_count == 1296);
    CHECK(r.expected == 324);
    CHECK(r.offending_copies.size() == 27);

    auto none = correspondence_check(make_cycle(9), 6);
    CHECK(none.loopy_count == 0);
    CHECK(none.copy_count == 0);
    CHECK(none.equal);

    // at k = 7 the automorphism group has order 2k, so the count matches
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        auto g = random_graph(11, make_rational(4, 5), seed);
        auto c = correspondence_check(g, 7);
        CHECK(c.automorphisms == 14);
        CHECK(c.equal);
    }
    CHECK_THROWS_AS(correspondence_check(dlg, 5), DomainError);
}

TEST_CASE("theorem bound")
{
    auto r = theorem_bound_check(make_complete_multipartite({3, 3, 3}), 6);
    CHECK(r.copies == 27);
    CHECK(r.bound == make_rational(19683, 64));
    CHECK(r.holds);
    auto d = theorem_bound_check(make_dlg(6), 6);
    CHECK(d.copies == 1);
    CHECK(d.bound == 27);
    CHECK(d.slack == 26);
    CHECK(d.holds);
}

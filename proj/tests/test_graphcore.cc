#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hh"

#include <indlab/errors.hh>
#include <indlab/generators.hh>
#include <indlab/isomorphism.hh>

#include <random>

using namespace indlab;

namespace
{
    auto is_regular(const Graph & g, unsigned d) -> bool
    {
        for (unsigned v = 0; v < g.order(); ++v)
            if (g.degree(v) != d)
                return false;
        return true;
    }

    auto three_disjoint_edges() -> Graph
    {
        return make_graph(6, {{0, 1}, {2, 3}, {4, 5}});
    }
}

TEST_CASE("builder rejects loops and out of range vertices")
{
    GraphBuilder b(4);
    CHECK_THROWS_AS(b.add_edge(1, 1), DomainError);
    CHECK_THROWS_AS(b.add_edge(0, 4), RangeError);
    b.add_edge(0, 1).add_edge(1, 0);
    auto g = b.build();
    CHECK(g.edge_count() == 1);
    CHECK(g.adjacent(1, 0));
    CHECK(check_invariants(g));
}

TEST_CASE("vertex and jump sets")
{
    CHECK_THROWS_AS(VertexSet({1, 2, 1}), DomainError);
    VertexSet s{3, 1, 2};
    CHECK(s.members()[0] == 1);
    CHECK(s.contains(3));
    CHECK_FALSE(s.contains(0));
    CHECK_THROWS(JumpSet({}));
    CHECK_THROWS(JumpSet({0}));
}

TEST_CASE("circulants")
{
    auto oct = make_circulant(6, {1, 2});
    CHECK(oct.order() == 6);
    CHECK(is_regular(oct, 4));
    CHECK(oct.edge_count() == 12);
    CHECK(make_circulant(5, {1, 2}) == make_complete(5));
    auto c4 = make_circulant(4, {1});
    CHECK(is_regular(c4, 2));
    CHECK(are_isomorphic(c4, make_cycle(4)));
    CHECK_THROWS_AS(make_circulant(2, {1}), SizeError);
    CHECK_THROWS_AS(make_circulant(6, {4}), RangeError);
    // a jump of n/2 adds one chord per vertex
    CHECK(make_circulant(6, {3}).edge_count() == 3);

    for (int n = 3; n <= 12; ++n)
        CHECK(are_isomorphic(make_circulant(n, {1}), make_cycle(n)));
}

TEST_CASE("double loop graphs")
{
    CHECK(make_dlg(5) == make_complete(5));
    CHECK(are_isomorphic(complement(make_dlg(6)), three_disjoint_edges()));
    CHECK(are_isomorphic(complement(make_dlg(7)), make_cycle(7)));
    CHECK(oracle::isomorphic(complement(make_dlg(7)), make_cycle(7)));
    CHECK_THROWS_AS(make_dlg(4), DomainError);
    for (int k = 5; k <= 12; ++k)
        CHECK(is_regular(make_dlg(k), 4));
}

TEST_CASE("chains")
{
    auto l0 = make_chain(0);
    CHECK(l0 == make_complete(3));
    auto l1 = make_chain(1);
    CHECK(l1.order() == 4);
    CHECK(l1.edge_count() == 5);
    auto l4 = make_chain(4);
    CHECK(l4.order() == 7);
    CHECK(l4.edge_count() == 11);
    CHECK_THROWS_AS(make_chain(-1), DomainError);
    for (int t = 0; t <= 12; ++t) {
        auto g = make_chain(t);
        CHECK(g.edge_count() == static_cast<std::uint64_t>(2 * t + 3));
        CHECK(triangle_count(g) == static_cast<std::uint64_t>(t + 1));
        // consecutive triangles {m, m+1, m+2} and {m+1, m+2, m+3} share an edge
        for (int m = 0; m + 2 < t + 3; ++m)
            CHECK((g.adjacent(m, m + 1) && g.adjacent(m, m + 2) && g.adjacent(m + 1, m + 2)));
    }
}

TEST_CASE("complete, cycle and multipartite families")
{
    CHECK(are_isomorphic(make_complete_multipartite({2, 2, 2}), make_dlg(6)));
    auto k33 = make_complete_multipartite({3, 3});
    CHECK(k33.edge_count() == 9);
    CHECK(make_complete(5) == make_dlg(5));
    CHECK_THROWS_AS(make_complete_multipartite({}), DomainError);
    CHECK(make_cycle(9).edge_count() == 9);
    CHECK(make_complete(7).edge_count() == 21);
}

TEST_CASE("paley graphs")
{
    CHECK(make_paley(5) == make_cycle(5));
    auto p13 = make_paley(13);
    CHECK(is_regular(p13, 6));
    CHECK(p13.edge_count() == 39);
    CHECK_THROWS_AS(make_paley(7), DomainError);
    CHECK_THROWS_AS(make_paley(9), DomainError);
    CHECK_THROWS_AS(make_paley(15), DomainError);
}

TEST_CASE("complement")
{
    CHECK(are_isomorphic(complement(make_dlg(6)), three_disjoint_edges()));
    CHECK(complement(make_complete(4)) == make_empty(4));
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        auto g = random_graph(11, make_rational(2, 5), seed);
        auto c = complement(g);
        CHECK(complement(c) == g);
        for (unsigned v = 0; v < g.order(); ++v)
            CHECK(g.degree(v) + c.degree(v) == g.order() - 1);
    }
}

TEST_CASE("blow-ups")
{
    auto oct = make_circulant(6, {1, 2});
    CHECK(are_isomorphic(blow_up(make_complete(3), {2, 2, 2}), oct));
    CHECK(blow_up(make_complete(2), {3, 3}) == make_complete_multipartite({3, 3}));
    auto c5 = blow_up(make_cycle(5), {2, 2, 2, 2, 2});
    CHECK(c5.order() == 10);
    CHECK(c5.edge_count() == 20);
    CHECK_THROWS_AS(blow_up(make_cycle(5), {1, 2}), DomainError);

    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        auto g = random_graph(7, make_rational(1, 2), seed);
        CHECK(are_isomorphic(blow_up(g, std::vector<int>(7, 1)), g));
    }

    CHECK(iterated_blow_up(make_cycle(5), 1) == make_cycle(5));
    auto two = iterated_blow_up(make_cycle(5), 2);
    CHECK(two.order() == 25);
    // 5 edges between classes of 5, plus 5 inner cycles
    CHECK(two.edge_count() == 5 * 25 + 5 * 5);
    CHECK_THROWS_AS(iterated_blow_up(make_cycle(5), 0), DomainError);
}

TEST_CASE("induced subgraphs")
{
    auto oct = make_circulant(6, {1, 2});
    CHECK(induced_subgraph(oct, VertexSet{0, 1, 2}) == make_complete(3));
    auto g = random_graph(9, make_rational(1, 2), 7);
    CHECK(induced_subgraph(g, VertexSet{0, 1, 2, 3, 4, 5, 6, 7, 8}) == g);
    CHECK(induced_subgraph(make_complete_multipartite({3, 3}), VertexSet{0, 1, 2}) == make_empty(3));
    CHECK_THROWS_AS(induced_subgraph(oct, VertexSet{0, 6}), RangeError);
}

TEST_CASE("random graphs")
{
    for (std::uint64_t seed : {0u, 1u, 99u}) {
        CHECK(random_graph(10, 0, seed) == make_empty(10));
        CHECK(random_graph(10, 1, seed) == make_complete(10));
    }
    auto g = random_graph(12, make_rational(1, 2), 42);
    CHECK(g.edge_count() >= 20);
    CHECK(g.edge_count() <= 46);
    CHECK(random_graph(12, make_rational(1, 2), 42) == g);
    CHECK_FALSE(random_graph(12, make_rational(1, 2), 43) == g);
    CHECK_THROWS_AS(random_graph(5, make_rational(3, 2), 0), DomainError);
    CHECK_THROWS_AS(random_graph(5, -1, 0), DomainError);
}

TEST_CASE("isomorphism against the permutation oracle")
{
    CHECK(are_isomorphic(make_dlg(6), make_complete_multipartite({2, 2, 2})));
    CHECK_FALSE(are_isomorphic(make_complete(4), make_cycle(4)));

    std::mt19937_64 rng(5);
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        auto g = random_graph(7, make_rational(1, 2), seed);
        std::vector<Vertex> perm(7);
        std::iota(perm.begin(), perm.end(), 0u);
        std::shuffle(perm.begin(), perm.end(), rng);
        auto p = permute(g, perm);
        CHECK(are_isomorphic(g, p));

        auto h = random_graph(7, make_rational(1, 2), seed + 1000);
        CHECK(are_isomorphic(g, h) == oracle::isomorphic(g, h));

        auto map = find_isomorphism(g, p);
        REQUIRE(map);
        for (unsigned i = 0; i < 7; ++i)
            for (unsigned j = 0; j < 7; ++j)
                CHECK(g.adjacent(i, j) == p.adjacent((*map)[i], (*map)[j]));
    }
}

TEST_CASE("automorphism counts")
{
    CHECK(count_automorphisms(make_cycle(5)) == 10);
    CHECK(count_automorphisms(make_complete(4)) == 24);
    CHECK(count_automorphisms(make_empty(3)) == 6);
    for (unsigned k = 5; k <= 8; ++k) {
        auto g = make_dlg(static_cast<int>(k));
        std::vector<Vertex> all(k);
        std::iota(all.begin(), all.end(), 0u);
        CHECK(count_automorphisms(g) == oracle::labelled_embeddings_onto(g, g, all));
    }
}

TEST_CASE("every generator output satisfies the graph invariants")
{
    std::vector<Graph> outputs{make_dlg(9), make_chain(5), make_paley(17), make_circulant(10, {2, 5}),
        make_complete_multipartite({1, 2, 3}), iterated_blow_up(make_cycle(5), 2),
        complement(make_paley(13)), random_graph(30, make_rational(1, 3), 4)};
    for (auto & g : outputs) {
        CHECK(check_invariants(g));
        for (unsigned i = 0; i < g.order(); ++i) {
            CHECK_FALSE(g.adjacent(i, i));
            for (unsigned j = 0; j < g.order(); ++j)
                CHECK(g.adjacent(i, j) == g.adjacent(j, i));
        }
    }
}

#pragma once

#include <indlab/graph.hh>
#include <indlab/rational.hh>

#include <cstdint>
#include <vector>

namespace indlab
{
    // Vertex i is joined to i +- j (mod n) for every jump j. A jump of
    // exactly n/2 contributes a single chord per vertex.
    auto make_circulant(int n, const JumpSet & jumps) -> Graph;

    // The double loop graph DLG(1,2) on k >= 5 vertices.
    auto make_dlg(int k) -> Graph;

    // Chain of t+1 triangles on t+3 vertices: triangle {0,1,2}, then vertex
    // m+2 joined to m and m+1 for m = 1..t.
    auto make_chain(int t) -> Graph;

    auto make_empty(int n) -> Graph;
    auto make_complete(int n) -> Graph;
    auto make_cycle(int n) -> Graph;
    auto make_complete_multipartite(const std::vector<int> & sizes) -> Graph;

    // Paley graph on a prime q = 1 (mod 4).
    auto make_paley(int q) -> Graph;

    auto complement(const Graph & g) -> Graph;

    // Vertex i becomes an independent class of sizes[i] vertices; classes
    // are completely joined exactly when the original vertices are adjacent.
    // Class i occupies a contiguous block of labels.
    auto blow_up(const Graph & h, const std::vector<int> & sizes) -> Graph;

    // levels = 1 is h itself; each further level substitutes a copy of the
    // previous level into every vertex of h. Order is order(h)^levels.
    auto iterated_blow_up(const Graph & h, int levels) -> Graph;

    // Vertices relabelled in ascending order of original index.
    auto induced_subgraph(const Graph & g, const VertexSet & s) -> Graph;

    // Each pair is an edge independently with probability p. The stream is
    // a splitmix64 sequence seeded from `seed`, consumed one draw per pair in
    // (0,1), (0,2), (1,2), (0,3), ... order, so graphs are reproducible
    // across platforms.
    auto random_graph(int n, const Rational & p, std::uint64_t seed) -> Graph;

    // Relabel so that new vertex i is old vertex perm[i].
    auto permute(const Graph & g, const std::vector<Vertex> & perm) -> Graph;

    auto triangle_count(const Graph & g) -> std::uint64_t;
}

#pragma once

#include <indlab/graph.hh>

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

namespace indlab
{
    // Screens on order, edge count, and per-vertex (degree, triangle count)
    // multisets, then backtracks over invariant-compatible assignments.
    // Intended for order <= 16.
    auto are_isomorphic(const Graph & g, const Graph & h) -> bool;

    // mapping[i] is the vertex of h that vertex i of g maps to.
    auto find_isomorphism(const Graph & g, const Graph & h) -> std::optional<std::vector<Vertex>>;

    // Visits every isomorphism g -> h; the visitor returns false to stop.
    auto for_each_isomorphism(const Graph & g, const Graph & h,
        const std::function<auto(const std::vector<Vertex> &)->bool> & visit) -> void;

    auto count_automorphisms(const Graph & g) -> std::uint64_t;
}

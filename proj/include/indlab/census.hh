#pragma once

#include <indlab/graph.hh>
#include <indlab/rational.hh>

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace indlab
{
    inline constexpr unsigned max_pattern_order = 10;
    inline constexpr unsigned max_exhaustive_order = 7;

    struct CountResult
    {
        std::uint64_t copies = 0;
        // Complete subsets that reached the isomorphism screen; subsets cut
        // early by the degree bounds are not counted.
        std::uint64_t subsets_examined = 0;
        Rational density;
    };

    /// Recognises induced copies of a fixed pattern of order <= 10 among
    /// k-vertex subsets described by their upper-triangle adjacency code.
    /// Bit j(j-1)/2 + i of a code is the pair (i, j), i < j, i.e. graph6
    /// column order. Subsets are screened by sorted degree sequence before
    /// the exact test, which is a table lookup for order <= 7 and a
    /// backtracking isomorphism test above that.
    class InducedMatcher
    {
    public:
        explicit InducedMatcher(const Graph & pattern);

        auto order() const -> unsigned { return _order; }
        auto min_degree() const -> unsigned { return _sorted_degrees.front(); }
        auto max_degree() const -> unsigned { return _sorted_degrees.back(); }

        // degrees[i] is the within-subset degree of subset member i.
        auto matches(std::uint64_t code, std::span<const std::uint8_t> degrees) const -> bool;

    private:
        auto backtrack_match(std::uint64_t code) const -> bool;

        unsigned _order;
        std::vector<std::uint8_t> _sorted_degrees;
        std::vector<std::uint16_t> _rows;
        std::vector<bool> _table;
    };

    auto count_induced(const Graph & h, const Graph & g, unsigned workers = 1) -> CountResult;
    auto density(const Graph & h, const Graph & g, unsigned workers = 1) -> Rational;

    // Every induced copy of h in g as an ascending vertex list, in
    // lexicographic order.
    auto induced_copies(const Graph & h, const Graph & g, unsigned workers = 1) -> std::vector<VertexSet>;

    struct ExhaustiveLabeled
    {
        unsigned n;
    };

    struct Corpus
    {
        std::string name;
        std::vector<Graph> graphs;
    };

    using Population = std::variant<ExhaustiveLabeled, Corpus>;

    auto describe(const Population & population) -> std::string;

    struct SearchOptions
    {
        unsigned workers = 1;
        std::size_t witness_cap = 10;
    };

    struct SearchResult
    {
        std::uint64_t max_copies = 0;
        std::vector<std::string> witnesses;
        std::string population;
        std::uint64_t graphs_examined = 0;
    };

    // Throws ResourceGuardError for exhaustive populations with n > 7.
    // Witnesses are the first maximisers in population order (ascending
    // labelled-graph code for exhaustive populations).
    auto extremal_search(const Graph & h, const Population & population, const SearchOptions & options = {})
        -> SearchResult;

    // One sweep of the population serving several patterns.
    auto extremal_search(std::span<const Graph> patterns, const Population & population,
        const SearchOptions & options = {}) -> std::vector<SearchResult>;

    // I(h, n) for n_lo..n_hi. Throws VerificationError if the sequence
    // increases anywhere.
    auto density_sequence(const Graph & h, unsigned n_lo, unsigned n_hi, const SearchOptions & options = {})
        -> std::vector<std::pair<unsigned, Rational>>;

    // C(m,2)^3: induced DLG(1,2) copies of order 6 in K_{m,m,m}.
    auto construction_count_k6(int m) -> BigInt;

    // Maximum induced K_{rho,rho} (odd = false) or K_{rho,rho+1} (odd = true)
    // copies over graphs of order n, from the balanced complete bipartite
    // construction.
    auto bipartite_count(int rho, int n, bool odd) -> BigInt;

    // Labelled graph on n vertices whose edge set is the given code.
    auto graph_from_code(unsigned n, std::uint64_t code) -> Graph;
}

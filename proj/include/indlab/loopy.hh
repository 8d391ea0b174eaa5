#pragma once

#include <indlab/graph.hh>
#include <indlab/rational.hh>

#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace indlab
{
    /// How the step that places v_{k-2} is judged. Strict: like every other
    /// middle step, v_{k-2} may touch only v_{k-3} and v_{k-4}. Amended:
    /// v_{k-2} must touch exactly v_{k-3}, v_{k-4} and v_0, which is what the
    /// wrap edge of a DLG(1,2) copy forces.
    enum class TupleMode
    {
        strict,
        amended
    };

    auto to_string(TupleMode mode) -> std::string;
    auto parse_tuple_mode(const std::string & text) -> TupleMode;

    /// Ordered sequence of distinct host vertices.
    class OrderedTuple
    {
    public:
        OrderedTuple() = default;
        OrderedTuple(std::initializer_list<Vertex> vertices);
        explicit OrderedTuple(std::vector<Vertex> vertices);

        auto vertices() const -> std::span<const Vertex> { return _vertices; }
        auto size() const -> std::size_t { return _vertices.size(); }
        auto operator[](std::size_t i) const -> Vertex { return _vertices[i]; }

        auto appended(Vertex v) const -> OrderedTuple;
        auto reversed() const -> OrderedTuple;
        // (v_j, v_{j+1}, ..., v_{j+k-1}), indices mod k.
        auto rotated(std::size_t j) const -> OrderedTuple;

        auto operator<=>(const OrderedTuple &) const = default;

    private:
        std::vector<Vertex> _vertices;
    };

    struct ProbabilityTrace
    {
        std::vector<std::uint64_t> step_counts;
        Rational probability;
    };

    // Definition form: length <= 3 induces K_l; longer tuples induce the
    // chain L_{l-3} under the labelling v_0..v_{l-1} and have a good prefix.
    auto is_good_tuple(const Graph & g, const OrderedTuple & t) -> bool;

    // Step form: v_2 touches v_0 and v_1, and each later v_m touches exactly
    // v_{m-1} and v_{m-2} among earlier members.
    auto is_good_tuple_incremental(const Graph & g, const OrderedTuple & t) -> bool;

    // Vertices that may be appended to an on-track prefix of length i < k.
    // Throws ContractError when the prefix itself is off track.
    auto extend_candidates(const Graph & g, const OrderedTuple & prefix, int k, TupleMode mode) -> VertexSet;

    auto is_loopy(const Graph & g, const OrderedTuple & t, int k, TupleMode mode) -> bool;

    // Lexicographic by vertex sequence.
    auto enumerate_loopy(const Graph & g, int k, TupleMode mode, unsigned workers = 1) -> std::vector<OrderedTuple>;

    // n_i = number of candidates at step i along d; P(D) = prod 1/n_i.
    auto tuple_probability(const Graph & g, const OrderedTuple & d, TupleMode mode) -> ProbabilityTrace;

    struct LemmaReport
    {
        Rational sum;
        std::uint64_t loopy_count = 0;
        bool holds = false;
    };

    auto lemma_sum(const Graph & g, int k, TupleMode mode, unsigned workers = 1) -> LemmaReport;

    // The standard cyclic labelling of an induced DLG(1,2) copy: v_i is
    // adjacent to v_{i+-1} and v_{i+-2} (mod k). Throws DomainError if the
    // set does not induce DLG(1,2) of order |copy|.
    auto cyclic_labelling(const Graph & g, const VertexSet & copy) -> OrderedTuple;

    struct RotationReport
    {
        int k = 0;
        unsigned n = 0;
        Rational forward_sum;
        Rational total_sum;
        Rational forward_threshold;
        Rational total_threshold;
        bool forward_holds = false;
        bool total_holds = false;
        // Tuples among the 2k rotations/reversals that failed the mode's
        // prefix rules and contributed zero.
        unsigned non_loopy_rotations = 0;
        // Set when every rotation contributed zero, as happens in strict mode.
        bool definitional_degeneracy = false;
    };

    // Sums P(D_j) over the k forward rotations of the labelling and over
    // those plus their k reversals, against k^k/(54 n^k) and k^k/(27 n^k).
    auto rotation_bound_check(const Graph & g, const OrderedTuple & copy_labelling, TupleMode mode) -> RotationReport;

    struct CorrespondenceReport
    {
        int k = 0;
        std::uint64_t loopy_count = 0;
        std::uint64_t copy_count = 0;
        std::uint64_t expected = 0; // 2k * copies
        bool equal = false;
        std::uint64_t automorphisms = 0; // |Aut(DLG(1,2) of order k)|
        bool matches_automorphism_count = false;
        // Copies whose own loopy-tuple count differs from 2k.
        std::vector<VertexSet> offending_copies;
    };

    // Amended mode; requires k >= 6.
    auto correspondence_check(const Graph & g, int k, unsigned workers = 1) -> CorrespondenceReport;

    struct TheoremReport
    {
        int k = 0;
        unsigned n = 0;
        std::uint64_t copies = 0;
        Rational bound; // 27 n^k / k^k
        Rational slack; // bound - copies
        bool holds = false;
    };

    auto theorem_bound_check(const Graph & g, int k, unsigned workers = 1) -> TheoremReport;
}

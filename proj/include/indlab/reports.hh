#pragma once

#include <indlab/bounds.hh>
#include <indlab/census.hh>
#include <indlab/loopy.hh>

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace indlab
{
    using Json = nlohmann::ordered_json;

    inline constexpr int report_schema = 1;

    // Numerators and denominators are written as decimal strings so that
    // values beyond 64 bits survive every JSON reader.
    auto rational_fields(Json & object, const std::string & prefix, const Rational & q) -> void;

    auto count_report(const std::string & pattern, const std::string & host, const CountResult & result) -> Json;

    // {schema, pattern, population, max_copies, density_num, density_den,
    //  witnesses[], graphs_examined}
    auto search_report(const std::string & pattern, unsigned pattern_order, const SearchResult & result) -> Json;

    struct LoopyVerification
    {
        TupleMode mode = TupleMode::amended;
        int k = 0;
        std::string host;
        LemmaReport lemma;
        std::uint64_t copy_count = 0;
        std::optional<CorrespondenceReport> correspondence;
        bool rotation_k = true;
        bool rotation_2k = true;
        std::uint64_t rotation_copies_checked = 0;
        TheoremReport theorem;
        std::vector<std::string> findings;

        // A checked claim failed (a finding is not a failure).
        auto failed() const -> bool;
    };

    // Runs enumerate_loopy / lemma_sum / correspondence_check (amended,
    // k >= 6) / rotation_bound_check over every copy / theorem_bound_check.
    auto verify_loopy(const Graph & g, const std::string & host, int k, TupleMode mode, unsigned workers)
        -> LoopyVerification;

    // {schema, mode, k, host, loopy_count, copy_count, lemma_sum_num,
    //  lemma_sum_den, checks: {lemma, correspondence, rotation_k,
    //  rotation_2k, theorem_bound}, ...}
    auto loopy_report(const LoopyVerification & v) -> Json;

    // Columns: name,k,n,num,den,decimal,kind. Irrational values leave
    // num/den empty and give 30 significant digits.
    auto bounds_csv(const std::vector<BoundReport> & table) -> std::string;
    auto bounds_json(const std::vector<BoundReport> & table) -> Json;
    auto gap_json(const GapReport & gap) -> Json;
}

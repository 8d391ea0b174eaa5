#pragma once

#include <indlab/graph.hh>
#include <indlab/rational.hh>
#include <indlab/reports.hh>

#include <cstdint>
#include <string>
#include <vector>

namespace indlab
{
    struct AcceptanceConfig
    {
        unsigned workers = 1;
        std::uint64_t seed = 0;
        // Criterion 11 reruns the whole suite; disabled for the inner runs.
        bool determinism_check = true;
    };

    struct CriterionResult
    {
        int id = 0;
        std::string name;
        bool passed = false;
        std::string summary;
        Json data;
        double seconds = 0;
    };

    struct AcceptanceRun
    {
        std::vector<CriterionResult> criteria;

        auto passed() const -> bool;
        // Deterministic content: no timings, no worker count.
        auto report() const -> Json;
        auto metadata(unsigned workers) const -> Json;
    };

    struct SuiteGraph
    {
        Graph graph;
        Rational p;
        std::uint64_t seed;
    };

    inline constexpr unsigned suite_size = 200;
    inline constexpr int suite_order = 12;

    // Graph i is random_graph(12, p_i, seed + i), p_i cycling 3/10, 1/2, 4/5.
    auto random_suite(std::uint64_t seed) -> std::vector<SuiteGraph>;

    auto run_acceptance(const AcceptanceConfig & config) -> AcceptanceRun;
}

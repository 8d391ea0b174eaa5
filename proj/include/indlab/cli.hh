#pragma once

#include <indlab/graph.hh>
#include <indlab/loopy.hh>

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace indlab
{
    struct RunConfig
    {
        std::string command;
        std::vector<std::string> families;    // gen
        std::string pattern;                  // count, search
        std::string host;                     // count, loopy
        std::optional<unsigned> exhaustive;   // search
        std::optional<std::string> corpus;    // search: graph6 file
        unsigned witness_cap = 10;
        int k = 6;
        TupleMode mode = TupleMode::amended;
        int k_lo = 5, k_hi = 10;
        std::vector<int> ns{7, 8, 10, 12};
        std::uint64_t seed = 0;
        unsigned workers = 1;
        std::optional<std::string> output;
        std::optional<std::string> metadata;
        std::string format;                   // empty: the command's default
    };

    inline constexpr int exit_success = 0;
    inline constexpr int exit_verification = 1;
    inline constexpr int exit_usage = 2;
    inline constexpr int exit_resource = 3;

    // Family specifiers: dlg:k, circulant:n:j1,j2,..., chain:t, kmmm:m,
    // paley:q, cycle:n, complete:n, empty:n, path:n, multipartite:a,b,...,
    // random:n:p[:seed], g6:<path>; and the names Cn, Kn, Pn, paw, S4, K112.
    // A random: specifier without a seed uses `seed`.
    auto parse_graph_spec(const std::string & spec, std::uint64_t seed = 0) -> Graph;

    auto run(const RunConfig & config, std::ostream & out, std::ostream & err) -> int;

    // Parses the command line and runs it. Never throws.
    auto cli_main(int argc, const char * const * argv, std::ostream & out, std::ostream & err) -> int;
}

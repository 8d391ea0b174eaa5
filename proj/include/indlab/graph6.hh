#pragma once

#include <indlab/graph.hh>

#include <filesystem>
#include <istream>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace indlab
{
    inline constexpr unsigned max_graph6_order = 258047;

    // One graph6 line without the trailing newline.
    auto encode_graph6(const Graph & g) -> std::string;

    // Accepts an optional ">>graph6<<" header and a trailing "\n" or "\r\n".
    // Throws ParseError on anything malformed.
    auto decode_graph6(std::string_view text) -> Graph;

    // Blank lines are skipped; errors carry the 1-based line number.
    auto read_graph6(std::istream & in) -> std::vector<Graph>;
    auto read_graph6_file(const std::filesystem::path & path) -> std::vector<Graph>;

    auto write_graph6(std::ostream & out, const std::vector<Graph> & graphs) -> void;
}

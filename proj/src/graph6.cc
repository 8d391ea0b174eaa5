#include <indlab/errors.hh>
#include <indlab/graph6.hh>

#include <fstream>

namespace indlab
{
    namespace
    {
        constexpr int bias = 63;
        constexpr int long_marker = 126;
    }

    auto encode_graph6(const Graph & g) -> std::string
    {
        auto n = g.order();
        if (n > max_graph6_order)
            throw SizeError{"graph6 supports orders up to 258047"};

        std::string out;
        if (n <= 62)
            out.push_back(static_cast<char>(n + bias));
        else {
            out.push_back(static_cast<char>(long_marker));
            for (int shift = 12; shift >= 0; shift -= 6)
                out.push_back(static_cast<char>(((n >> shift) & 0x3f) + bias));
        }

        int pending = 0, filled = 0;
        for (Vertex v = 1; v < n; ++v)
            for (Vertex u = 0; u < v; ++u) {
                pending = (pending << 1) | (g.adjacent(u, v) ? 1 : 0);
                if (++filled == 6) {
                    out.push_back(static_cast<char>(pending + bias));
                    pending = filled = 0;
                }
            }
        if (filled != 0)
            out.push_back(static_cast<char>((pending << (6 - filled)) + bias));
        return out;
    }

    auto decode_graph6(std::string_view text) -> Graph
    {
        constexpr std::string_view header = ">>graph6<<";
        if (text.starts_with(header))
            text.remove_prefix(header.size());
        if (text.ends_with('\n'))
            text.remove_suffix(1);
        if (text.ends_with('\r'))
            text.remove_suffix(1);
        if (text.empty())
            throw ParseError{"empty graph6 line"};

        for (char c : text) {
            int value = static_cast<unsigned char>(c);
            if (value < bias || value > long_marker)
                throw ParseError{"graph6 byte " + std::to_string(value) + " outside 63..126"};
        }

        std::size_t pos = 0;
        auto take = [&]() -> unsigned {
            if (pos >= text.size())
                throw ParseError{"truncated graph6 order header"};
            return static_cast<unsigned char>(text[pos++]) - bias;
        };

        unsigned long n = take();
        if (n == long_marker - bias) {
            n = 0;
            unsigned first = take();
            if (first == long_marker - bias)
                throw ParseError{"graph6 orders above 258047 are not supported"};
            n = first;
            for (int i = 0; i < 2; ++i)
                n = (n << 6) | take();
            if (n <= 62)
                throw ParseError{"graph6 long header used for a small order"};
        }
        if (n > max_graph_order)
            throw SizeError{"graph6 order " + std::to_string(n) + " exceeds the graph cap"};

        auto bits = n * (n - (n > 0 ? 1 : 0)) / 2;
        auto needed = (bits + 5) / 6;
        if (text.size() - pos != needed)
            throw ParseError{"graph6 body has " + std::to_string(text.size() - pos) + " bytes, expected " +
                std::to_string(needed)};

        GraphBuilder builder{static_cast<unsigned>(n)};
        std::size_t bit = 0;
        for (Vertex v = 1; v < n; ++v)
            for (Vertex u = 0; u < v; ++u, ++bit) {
                unsigned byte = static_cast<unsigned char>(text[pos + bit / 6]) - bias;
                if ((byte >> (5 - bit % 6)) & 1u)
                    builder.add_edge(u, v);
            }
        if (bits % 6 != 0) {
            unsigned last = static_cast<unsigned char>(text.back()) - bias;
            if ((last & ((1u << (6 - bits % 6)) - 1)) != 0)
                throw ParseError{"graph6 padding bits are not zero"};
        }
        return std::move(builder).build();
    }

    auto read_graph6(std::istream & in) -> std::vector<Graph>
    {
        std::vector<Graph> result;
        std::string line;
        for (std::size_t number = 1; std::getline(in, line); ++number) {
            if (line.empty() || line == "\r")
                continue;
            try {
                result.push_back(decode_graph6(line));
            }
            catch (const ParseError & e) {
                throw ParseError{"line " + std::to_string(number) + ": " + e.what()};
            }
        }
        return result;
    }

    auto read_graph6_file(const std::filesystem::path & path) -> std::vector<Graph>
    {
        std::ifstream in{path};
        if (! in)
            throw ParseError{"cannot open graph6 file " + path.string()};
        return read_graph6(in);
    }

    auto write_graph6(std::ostream & out, const std::vector<Graph> & graphs) -> void
    {
        for (auto & g : graphs)
            out << encode_graph6(g) << '\n';
    }
}

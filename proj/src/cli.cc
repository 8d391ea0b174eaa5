#include <indlab/acceptance.hh>
#include <indlab/bounds.hh>
#include <indlab/census.hh>
#include <indlab/cli.hh>
#include <indlab/errors.hh>
#include <indlab/generators.hh>
#include <indlab/graph6.hh>
#include <indlab/parallel.hh>
#include <indlab/reports.hh>

#include <CLI11.hpp>

#include <charconv>
#include <fstream>
#include <iostream>
#include <sstream>

namespace indlab
{
    namespace
    {
        auto split(const std::string & text, char sep) -> std::vector<std::string>
        {
            std::vector<std::string> parts;
            std::string::size_type start = 0;
            while (true) {
                auto pos = text.find(sep, start);
                parts.push_back(text.substr(start, pos - start));
                if (pos == std::string::npos)
                    return parts;
                start = pos + 1;
            }
        }

        auto to_int(const std::string & text, const std::string & spec) -> int
        {
            int value = 0;
            auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
            if (ec != std::errc{} || ptr != text.data() + text.size())
                throw ParseError{"bad integer '" + text + "' in graph specifier '" + spec + "'"};
            return value;
        }

        auto to_ints(const std::string & text, const std::string & spec) -> std::vector<int>
        {
            std::vector<int> values;
            for (auto & part : split(text, ','))
                values.push_back(to_int(part, spec));
            return values;
        }

        auto make_path(int n) -> Graph
        {
            if (n < 1)
                throw SizeError{"path needs at least one vertex"};
            GraphBuilder b(static_cast<unsigned>(n));
            for (int i = 0; i + 1 < n; ++i)
                b.add_edge(static_cast<Vertex>(i), static_cast<Vertex>(i + 1));
            return std::move(b).build();
        }

        auto named_pattern(const std::string & spec) -> std::optional<Graph>
        {
            if (spec == "paw")
                return make_graph(4, {{0, 1}, {0, 2}, {1, 2}, {2, 3}});
            if (spec == "S4")
                return make_complete_multipartite({1, 3});
            if (spec == "K112")
                return make_complete_multipartite({1, 1, 2});
            if (spec.size() >= 2 && (spec[0] == 'C' || spec[0] == 'K' || spec[0] == 'P')) {
                auto rest = spec.substr(1);
                if (rest.find_first_not_of("0123456789") != std::string::npos)
                    return std::nullopt;
                int n = to_int(rest, spec);
                switch (spec[0]) {
                case 'C': return make_cycle(n);
                case 'K': return make_complete(n);
                default: return make_path(n);
                }
            }
            return std::nullopt;
        }

        auto write_output(const RunConfig & config, std::ostream & out, const std::string & content) -> void
        {
            if (! config.output) {
                out << content;
                return;
            }
            std::ofstream file{*config.output, std::ios::binary};
            if (! file)
                throw DomainError{"cannot open output file '" + *config.output + "'"};
            file << content;
            if (! file)
                throw DomainError{"failed writing output file '" + *config.output + "'"};
        }

        auto require_format(const RunConfig & config, std::initializer_list<const char *> allowed) -> std::string
        {
            if (config.format.empty())
                return *allowed.begin();
            for (auto a : allowed)
                if (config.format == a)
                    return config.format;
            throw DomainError{"format '" + config.format + "' is not available for " + config.command};
        }

        auto run_gen(const RunConfig & config, std::ostream & out) -> int
        {
            require_format(config, {"graph6"});
            if (config.families.empty())
                throw DomainError{"gen needs at least one family specifier"};
            std::ostringstream s;
            std::vector<Graph> graphs;
            for (auto & spec : config.families)
                graphs.push_back(parse_graph_spec(spec, config.seed));
            write_graph6(s, graphs);
            write_output(config, out, s.str());
            return exit_success;
        }

        auto run_count(const RunConfig & config, std::ostream & out) -> int
        {
            require_format(config, {"json"});
            auto h = parse_graph_spec(config.pattern, config.seed);
            auto g = parse_graph_spec(config.host, config.seed);
            auto result = count_induced(h, g, config.workers);
            write_output(config, out, count_report(config.pattern, config.host, result).dump(2) + "\n");
            return exit_success;
        }

        auto run_search(const RunConfig & config, std::ostream & out) -> int
        {
            require_format(config, {"json"});
            if (config.exhaustive.has_value() == config.corpus.has_value())
                throw DomainError{"search needs exactly one of --exhaustive and --corpus"};
            auto h = parse_graph_spec(config.pattern, config.seed);
            Population population = config.exhaustive
                ? Population{ExhaustiveLabeled{*config.exhaustive}}
                : Population{Corpus{*config.corpus, read_graph6_file(*config.corpus)}};
            auto result = extremal_search(h, population, SearchOptions{config.workers, config.witness_cap});
            write_output(config, out, search_report(config.pattern, h.order(), result).dump(2) + "\n");
            return exit_success;
        }

        auto run_loopy(const RunConfig & config, std::ostream & out) -> int
        {
            require_format(config, {"json"});
            auto g = parse_graph_spec(config.host, config.seed);
            auto v = verify_loopy(g, config.host, config.k, config.mode, config.workers);
            write_output(config, out, loopy_report(v).dump(2) + "\n");
            return v.failed() ? exit_verification : exit_success;
        }

        auto run_bounds(const RunConfig & config, std::ostream & out) -> int
        {
            auto format = require_format(config, {"csv", "json"});
            if (config.k_lo > config.k_hi)
                throw DomainError{"--k-lo must not exceed --k-hi"};
            auto table = bound_table(config.k_lo, config.k_hi, config.ns);
            if (format == "csv") {
                write_output(config, out, bounds_csv(table));
                return exit_success;
            }
            auto j = bounds_json(table);
            Json gaps = Json::array();
            for (int k = 5; k <= 7; ++k)
                gaps.push_back(gap_json(gap_report(k)));
            j["gaps"] = gaps;
            write_output(config, out, j.dump(2) + "\n");
            return exit_success;
        }

        auto run_verify(const RunConfig & config, std::ostream & out, std::ostream & err) -> int
        {
            require_format(config, {"json"});
            auto run = run_acceptance(AcceptanceConfig{config.workers, config.seed, true});
            for (auto & c : run.criteria)
                err << (c.passed ? "PASS" : "FAIL") << " " << c.id << " " << c.name << ": " << c.summary << "\n";
            write_output(config, out, run.report().dump(2) + "\n");
            auto meta = run.metadata(config.workers).dump();
            if (config.metadata) {
                std::ofstream file{*config.metadata};
                file << meta << "\n";
            }
            else
                err << "metadata " << meta << "\n";
            return run.passed() ? exit_success : exit_verification;
        }
    }

    auto parse_graph_spec(const std::string & spec, std::uint64_t seed) -> Graph
    {
        if (auto named = named_pattern(spec))
            return *named;

        auto colon = spec.find(':');
        if (colon == std::string::npos)
            throw ParseError{"unknown graph specifier '" + spec + "'"};
        auto family = spec.substr(0, colon);
        auto rest = spec.substr(colon + 1);
        if (family == "g6") {
            auto graphs = read_graph6_file(rest);
            if (graphs.size() != 1)
                throw ParseError{"graph6 file '" + rest + "' holds " + std::to_string(graphs.size()) +
                    " graphs; exactly one expected"};
            return graphs.front();
        }

        auto args = split(rest, ':');
        auto expect = [&](std::size_t lo, std::size_t hi) {
            if (args.size() < lo || args.size() > hi)
                throw ParseError{"wrong number of parameters in graph specifier '" + spec + "'"};
        };
        if (family == "dlg") {
            expect(1, 1);
            return make_dlg(to_int(args[0], spec));
        }
        if (family == "circulant") {
            expect(2, 2);
            auto jumps = to_ints(args[1], spec);
            return make_circulant(to_int(args[0], spec), JumpSet{std::move(jumps)});
        }
        if (family == "chain") {
            expect(1, 1);
            return make_chain(to_int(args[0], spec));
        }
        if (family == "kmmm") {
            expect(1, 1);
            int m = to_int(args[0], spec);
            return make_complete_multipartite({m, m, m});
        }
        if (family == "paley") {
            expect(1, 1);
            return make_paley(to_int(args[0], spec));
        }
        if (family == "cycle") {
            expect(1, 1);
            return make_cycle(to_int(args[0], spec));
        }
        if (family == "complete") {
            expect(1, 1);
            return make_complete(to_int(args[0], spec));
        }
        if (family == "empty") {
            expect(1, 1);
            return make_empty(to_int(args[0], spec));
        }
        if (family == "path") {
            expect(1, 1);
            return make_path(to_int(args[0], spec));
        }
        if (family == "multipartite") {
            expect(1, 1);
            return make_complete_multipartite(to_ints(args[0], spec));
        }
        if (family == "random") {
            expect(2, 3);
            std::uint64_t s = seed;
            if (args.size() == 3) {
                auto [ptr, ec] = std::from_chars(args[2].data(), args[2].data() + args[2].size(), s);
                if (ec != std::errc{} || ptr != args[2].data() + args[2].size())
                    throw ParseError{"bad seed in graph specifier '" + spec + "'"};
            }
            return random_graph(to_int(args[0], spec), parse_rational(args[1]), s);
        }
        throw ParseError{"unknown graph family '" + family + "'"};
    }

    auto run(const RunConfig & config, std::ostream & out, std::ostream & err) -> int
    {
        if (config.workers < 1)
            throw DomainError{"workers must be at least 1"};
        if (config.command == "gen")
            return run_gen(config, out);
        if (config.command == "count")
            return run_count(config, out);
        if (config.command == "search")
            return run_search(config, out);
        if (config.command == "loopy")
            return run_loopy(config, out);
        if (config.command == "bounds")
            return run_bounds(config, out);
        if (config.command == "verify")
            return run_verify(config, out, err);
        throw DomainError{"unknown command '" + config.command + "'"};
    }

    auto cli_main(int argc, const char * const * argv, std::ostream & out, std::ostream & err) -> int
    {
        RunConfig config;
        config.workers = default_workers();
        std::string mode = "amended";

        CLI::App app{"Induced subgraph census and inducibility bound toolkit", "indlab"};
        app.require_subcommand(1, 1);

        auto common = [&](CLI::App * sub) {
            sub->add_option("--workers", config.workers, "worker threads (default: INDLAB_WORKERS or all cores)")
                ->check(CLI::PositiveNumber);
            sub->add_option("--seed", config.seed, "seed for random families")->capture_default_str();
            sub->add_option("--output,-o", config.output, "write the report here instead of stdout");
            sub->add_option("--format", config.format, "json | csv | graph6");
        };

        auto gen = app.add_subcommand("gen", "write graphs in graph6 format");
        gen->add_option("family", config.families, "family specifiers")->required();
        common(gen);

        auto count = app.add_subcommand("count", "count induced copies of a pattern in a host");
        count->add_option("--pattern", config.pattern)->required();
        count->add_option("--host", config.host)->required();
        common(count);

        auto search = app.add_subcommand("search", "maximise induced copies over a population");
        search->add_option("--pattern", config.pattern)->required();
        auto exhaustive = search->add_option("--exhaustive", config.exhaustive, "all labelled graphs of order N");
        auto corpus = search->add_option("--corpus", config.corpus, "graph6 file");
        exhaustive->excludes(corpus);
        search->add_option("--witness-cap", config.witness_cap)->capture_default_str();
        common(search);

        auto loopy = app.add_subcommand("loopy", "enumerate loopy tuples and check the counting argument");
        loopy->add_option("--host", config.host)->required();
        loopy->add_option("--k", config.k)->capture_default_str();
        loopy->add_option("--mode", mode, "strict | amended")->capture_default_str();
        common(loopy);

        auto bounds = app.add_subcommand("bounds", "evaluate the bound formulas");
        bounds->add_option("--k-lo", config.k_lo)->capture_default_str();
        bounds->add_option("--k-hi", config.k_hi)->capture_default_str();
        bounds->add_option("--n", config.ns, "host orders for count bounds")->delimiter(',');
        common(bounds);

        auto verify = app.add_subcommand("verify", "run the acceptance suite");
        verify->add_option("--metadata", config.metadata, "write timing metadata here");
        common(verify);

        try {
            app.parse(argc, argv);
        }
        catch (const CLI::ParseError & e) {
            std::ostringstream o, r;
            int code = app.exit(e, o, r);
            out << o.str();
            err << r.str();
            return code == 0 ? exit_success : exit_usage;
        }

        config.command = app.get_subcommands().front()->get_name();
        try {
            config.mode = parse_tuple_mode(mode);
            return run(config, out, err);
        }
        catch (const ResourceGuardError & e) {
            err << "indlab: resource guard: " << e.what() << "\n";
            return exit_resource;
        }
        catch (const VerificationError & e) {
            err << "indlab: verification failed: " << e.what() << "\n";
            return exit_verification;
        }
        catch (const std::bad_alloc &) {
            err << "indlab: out of memory\n";
            return exit_resource;
        }
        catch (const std::exception & e) {
            err << "indlab: " << e.what() << "\n";
            return exit_usage;
        }
    }
}

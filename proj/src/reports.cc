#include <indlab/generators.hh>
#include <indlab/reports.hh>

#include <sstream>

namespace indlab
{
    auto rational_fields(Json & object, const std::string & prefix, const Rational & q) -> void
    {
        object[prefix + "_num"] = q.get_num().get_str();
        object[prefix + "_den"] = q.get_den().get_str();
    }

    auto count_report(const std::string & pattern, const std::string & host, const CountResult & result) -> Json
    {
        Json j;
        j["schema"] = report_schema;
        j["pattern"] = pattern;
        j["host"] = host;
        j["copies"] = result.copies;
        j["subsets_examined"] = result.subsets_examined;
        rational_fields(j, "density", result.density);
        j["density_decimal"] = format_significant(result.density, 6);
        return j;
    }

    auto search_report(const std::string & pattern, unsigned pattern_order, const SearchResult & result) -> Json
    {
        Json j;
        j["schema"] = report_schema;
        j["pattern"] = pattern;
        j["population"] = result.population;
        j["max_copies"] = result.max_copies;
        // density relative to the population order; corpora of mixed order
        // report the raw maximum only
        auto open = result.population.find('('), close = result.population.find(')');
        if (open != std::string::npos && close != std::string::npos) {
            auto n = std::stoul(result.population.substr(open + 1, close - open - 1));
            rational_fields(j, "density", make_rational(result.max_copies, binomial(n, pattern_order)));
        }
        else {
            j["density_num"] = nullptr;
            j["density_den"] = nullptr;
        }
        j["witnesses"] = result.witnesses;
        j["graphs_examined"] = result.graphs_examined;
        return j;
    }

    auto LoopyVerification::failed() const -> bool
    {
        if (! lemma.holds || ! theorem.holds)
            return true;
        if (mode == TupleMode::amended) {
            if (correspondence && ! correspondence->equal)
                return true;
            if (! rotation_k || ! rotation_2k)
                return true;
        }
        return false;
    }

    auto verify_loopy(const Graph & g, const std::string & host, int k, TupleMode mode, unsigned workers)
        -> LoopyVerification
    {
        LoopyVerification v;
        v.mode = mode;
        v.k = k;
        v.host = host;
        v.lemma = lemma_sum(g, k, mode, workers);
        std::vector<VertexSet> copies;
        if (g.order() >= static_cast<unsigned>(k))
            copies = induced_copies(make_dlg(k), g, workers);
        v.copy_count = copies.size();

        if (mode == TupleMode::amended && k >= 6)
            v.correspondence = correspondence_check(g, k, workers);

        bool all_degenerate = ! copies.empty();
        for (auto & c : copies) {
            auto r = rotation_bound_check(g, cyclic_labelling(g, c), mode);
            v.rotation_k = v.rotation_k && r.forward_holds;
            v.rotation_2k = v.rotation_2k && r.total_holds;
            all_degenerate = all_degenerate && r.definitional_degeneracy;
            ++v.rotation_copies_checked;
        }
        v.theorem = theorem_bound_check(g, k, workers);

        if (mode == TupleMode::strict && v.lemma.loopy_count == 0 && v.copy_count > 0)
            v.findings.push_back("strict-mode vacuity: " + std::to_string(v.copy_count) +
                " induced DLG(1,2) copies but no strict loopy k-tuple; the wrap edge {v_0, v_{k-2}} "
                "contradicts the chain requirement on the length-(k-1) prefix");
        if (all_degenerate)
            v.findings.push_back("definitional degeneracy: every rotation and reversal of every copy fails the " +
                to_string(mode) + " prefix rules, so rotation sums are 0");
        if (k == 5 && v.copy_count > 0)
            v.findings.push_back("k = 5 degeneracy: DLG(1,2) is K5 and every ordering of a copy is loopy (" +
                std::to_string(v.lemma.loopy_count) + " tuples for " + std::to_string(v.copy_count) + " copies)");
        if (v.correspondence && ! v.correspondence->equal && v.correspondence->matches_automorphism_count)
            v.findings.push_back("loopy tuples per copy equal |Aut(DLG(1,2))| = " +
                std::to_string(v.correspondence->automorphisms) + ", not 2k = " + std::to_string(2 * k));
        return v;
    }

    auto loopy_report(const LoopyVerification & v) -> Json
    {
        Json j;
        j["schema"] = report_schema;
        j["mode"] = to_string(v.mode);
        j["k"] = v.k;
        j["host"] = v.host;
        j["loopy_count"] = v.lemma.loopy_count;
        j["copy_count"] = v.copy_count;
        rational_fields(j, "lemma_sum", v.lemma.sum);

        Json checks;
        checks["lemma"] = v.lemma.holds;
        if (v.correspondence)
            checks["correspondence"] = v.correspondence->equal;
        else
            checks["correspondence"] = nullptr;
        checks["rotation_k"] = v.rotation_k;
        checks["rotation_2k"] = v.rotation_2k;
        checks["theorem_bound"] = v.theorem.holds;
        j["checks"] = checks;

        if (v.correspondence) {
            Json c;
            c["expected_2k_copies"] = v.correspondence->expected;
            c["automorphisms"] = v.correspondence->automorphisms;
            c["matches_automorphism_count"] = v.correspondence->matches_automorphism_count;
            Json offending = Json::array();
            for (auto & copy : v.correspondence->offending_copies)
                offending.push_back(std::vector<Vertex>(copy.begin(), copy.end()));
            c["offending_copies"] = offending;
            j["correspondence"] = c;
        }
        j["rotation_copies_checked"] = v.rotation_copies_checked;

        Json t;
        t["copies"] = v.theorem.copies;
        rational_fields(t, "bound", v.theorem.bound);
        rational_fields(t, "slack", v.theorem.slack);
        j["theorem"] = t;
        j["findings"] = v.findings;
        j["finding"] = ! v.findings.empty();
        return j;
    }

    namespace
    {
        auto param_string(const BoundReport & r, const std::string & key) -> std::string
        {
            auto it = r.params.find(key);
            return it == r.params.end() ? std::string{} : to_string(it->second);
        }

        auto long_decimal(const BoundReport & r) -> std::string
        {
            return format_significant(r.decimal(), 30);
        }
    }

    auto bounds_csv(const std::vector<BoundReport> & table) -> std::string
    {
        std::ostringstream out;
        out << "name,k,n,num,den,decimal,kind\n";
        for (auto & r : table) {
            out << r.name << ',' << param_string(r, "k") << ',' << param_string(r, "n") << ',';
            if (auto q = std::get_if<Rational>(&r.value))
                out << q->get_num().get_str() << ',' << q->get_den().get_str() << ',';
            else
                out << ",,";
            out << long_decimal(r) << ',' << to_string(r.kind) << '\n';
        }
        return out.str();
    }

    auto bounds_json(const std::vector<BoundReport> & table) -> Json
    {
        Json rows = Json::array();
        for (auto & r : table) {
            Json j;
            j["name"] = r.name;
            Json params = Json::object();
            for (auto & [key, value] : r.params)
                params[key] = to_string(value);
            j["params"] = params;
            j["kind"] = to_string(r.kind);
            if (auto q = std::get_if<Rational>(&r.value)) {
                j["exact"] = true;
                rational_fields(j, "value", *q);
            }
            else {
                j["exact"] = false;
                j["irrational"] = r.irrational;
            }
            j["decimal"] = long_decimal(r);
            j["decimal6"] = format_significant(r.decimal(), 6);
            if (r.asymptotic)
                j["asymptotic"] = true;
            if (! r.construction.empty())
                j["construction"] = r.construction;
            rows.push_back(j);
        }
        Json out;
        out["schema"] = report_schema;
        out["bounds"] = rows;
        return out;
    }

    auto gap_json(const GapReport & gap) -> Json
    {
        Json j;
        j["k"] = gap.k;
        j["description"] = gap.description;
        rational_fields(j, "ratio", gap.ratio);
        j["ratio_decimal"] = gap.ratio_decimal;
        j["quoted_factor"] = gap.quoted_factor;
        j["matches_quoted"] = gap.matches_quoted;
        return j;
    }
}

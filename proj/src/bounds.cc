#include <indlab/bounds.hh>
#include <indlab/errors.hh>

#include <boost/math/constants/constants.hpp>

namespace indlab
{
    namespace
    {
        auto require(bool condition, const std::string & message) -> void
        {
            if (! condition)
                throw DomainError{message};
        }

        auto ui(int x) -> unsigned long
        {
            return static_cast<unsigned long>(x);
        }

        auto k_to_k(int k) -> BigInt
        {
            return power(k, ui(k));
        }

        auto decimal_of(const BigInt & z) -> Decimal
        {
            return Decimal{z.get_str()};
        }

        auto e() -> Decimal
        {
            return boost::math::constants::e<Decimal>();
        }

        auto rational_report(std::string name, std::map<std::string, Rational> params, Rational value,
            BoundKind kind, std::string construction = {}) -> BoundReport
        {
            BoundReport r;
            r.name = std::move(name);
            r.params = std::move(params);
            r.value = std::move(value);
            r.kind = kind;
            r.construction = std::move(construction);
            return r;
        }

        auto decimal_report(std::string name, std::map<std::string, Rational> params, Decimal value,
            BoundKind kind, std::string irrational, std::string construction = {}) -> BoundReport
        {
            BoundReport r;
            r.name = std::move(name);
            r.params = std::move(params);
            r.value = std::move(value);
            r.kind = kind;
            r.irrational = std::move(irrational);
            r.construction = std::move(construction);
            return r;
        }
    }

    auto to_string(BoundKind kind) -> std::string
    {
        switch (kind) {
        case BoundKind::lower: return "lower";
        case BoundKind::upper: return "upper";
        case BoundKind::count_upper: return "count-upper";
        case BoundKind::reference: return "reference";
        }
        return "reference";
    }

    auto BoundReport::decimal() const -> Decimal
    {
        if (auto q = std::get_if<Rational>(&value))
            return to_decimal(*q);
        return std::get<Decimal>(value);
    }

    auto pg_lower(int k) -> Rational
    {
        require(k >= 2, "pg_lower needs k >= 2");
        return make_rational(factorial(ui(k)), k_to_k(k) - k);
    }

    auto pg_lower_stirling(int k) -> Decimal
    {
        require(k >= 1, "pg_lower_stirling needs k >= 1");
        using boost::multiprecision::exp;
        using boost::multiprecision::sqrt;
        return sqrt(2 * boost::math::constants::pi<Decimal>() * k) / exp(Decimal{k});
    }

    auto cycle_count_upper(int n, int k) -> Rational
    {
        require(k >= 5 && n >= k, "cycle_count_upper needs k >= 5 and n >= k");
        return make_rational(2 * BigInt{n}, k) * make_rational(power(n - 1, ui(k - 1)), power(k - 1, ui(k - 1)));
    }

    auto cycle_ind_upper_pg(int k) -> Decimal
    {
        require(k >= 5, "cycle_ind_upper_pg needs k >= 5");
        return 2 * e() * decimal_of(factorial(ui(k))) / decimal_of(k_to_k(k));
    }

    auto kral_count_upper(int n, int k) -> Rational
    {
        require(k >= 6 && n >= k, "kral_count_upper needs k >= 6 and n >= k");
        return make_rational(2 * power(n, ui(k)), k_to_k(k));
    }

    auto kral_ind_upper(int k) -> Rational
    {
        require(k >= 6, "kral_ind_upper needs k >= 6");
        return make_rational(2 * factorial(ui(k)), k_to_k(k));
    }

    auto dlg_count_upper(int n, int k) -> Rational
    {
        require(k >= 5 && n >= k, "dlg_count_upper needs k >= 5 and n >= k");
        return make_rational(27 * power(n, ui(k)), k_to_k(k));
    }

    auto dlg_ind_upper(int k) -> Rational
    {
        require(k >= 5, "dlg_ind_upper needs k >= 5");
        return make_rational(27 * factorial(ui(k)), k_to_k(k));
    }

    auto bipartite_ind(int rho, bool odd) -> Rational
    {
        require(rho >= 1, "bipartite_ind needs rho >= 1");
        auto top = binomial(ui(2 * rho + (odd ? 1 : 0)), ui(rho));
        return make_rational(top, power(2, ui(2 * rho)));
    }

    auto conj_disj_lower(int k, int k_prime, const Rational & i1, const Rational & i2) -> Rational
    {
        require(k >= 1 && k_prime >= 1, "conj_disj_lower needs k, k' >= 1");
        require(i1 >= 0 && i1 <= 1 && i2 >= 0 && i2 <= 1, "inducibilities must lie in [0, 1]");
        BigInt num = factorial(ui(k + k_prime)) * k_to_k(k) * k_to_k(k_prime);
        BigInt den = factorial(ui(k)) * factorial(ui(k_prime)) * k_to_k(k + k_prime);
        Rational result = make_rational(num, den) * i1 * i2;
        result.canonicalize();
        return result;
    }

    auto path_bounds(int k) -> PathBounds
    {
        require(k >= 3, "path_bounds needs k >= 3");
        PathBounds b;
        b.lower = make_rational(factorial(ui(k)), power(k + 1, ui(k - 1)) - 1);
        b.upper = make_rational(factorial(ui(k)), 2 * power(k - 1, ui(k - 1)));
        if (b.lower > b.upper)
            throw VerificationError{"path lower bound exceeds upper bound at k = " + std::to_string(k)};
        return b;
    }

    auto known_inducibility_names() -> std::vector<std::string>
    {
        return {"K3", "P3", "K4", "S4", "C4", "paw", "K112", "C5", "P4_lower_exoo", "P4_upper_exoo",
            "P4_upper_hirst", "P4_upper_vaughan", "P4_lower_evenzohar", "cycle_gap_hefetz_tyomkyn"};
    }

    auto known_inducibility(const std::string & name) -> BoundReport
    {
        using K = BoundKind;
        auto exact = [&](Rational v, K kind, std::string construction) {
            return rational_report(name, {}, std::move(v), kind, std::move(construction));
        };
        auto approx = [&](const char * v, K kind, std::string construction) {
            return decimal_report(name, {}, Decimal{v}, kind, "numerical (flag algebra)", std::move(construction));
        };

        if (name == "K3")
            return exact(1, K::reference, "A Complete Graph");
        if (name == "P3")
            return exact(make_rational(3, 4), K::reference, "A Complete Bipartite Graph");
        if (name == "K4")
            return exact(1, K::reference, "A Complete Graph");
        if (name == "S4")
            return exact(make_rational(1, 2), K::reference, "A Complete Bipartite Graph");
        if (name == "C4")
            return exact(make_rational(3, 8), K::reference, "A Complete Bipartite Graph");
        if (name == "paw")
            return exact(make_rational(3, 8), K::reference, "Two Disjoint Complete Bipartite Graphs");
        if (name == "K112" || name == "K_{1,1,2}")
            return exact(make_rational(72, 125), K::reference, "A Complete 5-equipartite Graph");
        if (name == "C5")
            return exact(make_rational(1, 26), K::reference, "Nested blow-up of C5");
        if (name == "P4_lower_exoo")
            return exact(make_rational(960, 4877), K::lower, "Blow-up of a Paley graph");
        if (name == "P4_upper_exoo")
            return exact(make_rational(1, 3), K::upper, "Blow-up of a Paley graph");
        if (name == "P4_upper_hirst")
            return approx("0.2064", K::upper, "Semi-definite method");
        if (name == "P4_upper_vaughan")
            return approx("0.204513", K::upper, "Flag algebra calculus");
        if (name == "P4_lower_evenzohar")
            return exact(make_rational(1173, 5824), K::lower, "Erdos conjecture with Thomason's construction");
        if (name == "cycle_gap_hefetz_tyomkyn") {
            auto r = decimal_report(name, {}, 128 * e() / 81, K::reference, "e",
                "Gap factor between cycle upper and lower bounds (k >= 6)");
            return r;
        }
        throw LookupError{"no registered inducibility for '" + name + "'"};
    }

    auto gap_report(int k) -> GapReport
    {
        GapReport r;
        r.k = k;
        switch (k) {
        case 5:
            r.description = "exact I(K5) / dlg_ind_upper(5)";
            r.numerator_bound = 1;
            r.denominator_bound = dlg_ind_upper(5);
            r.quoted_factor = "0.964506";
            break;
        case 6:
            r.description = "dlg_ind_upper(6) / K_{m,m,m} construction limit 10/81";
            r.numerator_bound = dlg_ind_upper(6);
            r.denominator_bound = make_rational(10, 81);
            r.quoted_factor = "3";
            break;
        case 7:
            r.description = "dlg_ind_upper(7) / pg_lower(7)";
            r.numerator_bound = dlg_ind_upper(7);
            r.denominator_bound = pg_lower(7);
            r.quoted_factor = "27";
            break;
        default: throw DomainError{"gap report only registered for k in {5, 6, 7}"};
        }
        r.ratio = r.numerator_bound / r.denominator_bound;
        r.ratio_decimal = format_significant(r.ratio, 6);
        // agreement within half a percent of the quoted factor
        auto quoted = parse_rational(r.quoted_factor);
        Rational deviation = r.ratio / quoted - 1;
        r.matches_quoted = abs(deviation) <= make_rational(1, 200);
        return r;
    }

    auto bound_table(int k_lo, int k_hi, const std::vector<int> & ns) -> std::vector<BoundReport>
    {
        using K = BoundKind;
        std::vector<BoundReport> table;
        for (int k = k_lo; k <= k_hi; ++k) {
            std::map<std::string, Rational> kp{{"k", k}};
            if (k >= 2)
                table.push_back(rational_report("pg_lower", kp, pg_lower(k), K::lower));
            if (k >= 1)
                table.push_back(decimal_report("pg_lower_stirling", kp, pg_lower_stirling(k), K::lower, "e, pi, sqrt"));
            if (k >= 5) {
                auto r = decimal_report("cycle_ind_upper_pg", kp, cycle_ind_upper_pg(k), K::upper, "e");
                table.push_back(r);
            }
            if (k >= 6) {
                auto r = rational_report("kral_ind_upper", kp, kral_ind_upper(k), K::upper);
                r.asymptotic = true;
                table.push_back(r);
            }
            if (k >= 5)
                table.push_back(rational_report("dlg_ind_upper", kp, dlg_ind_upper(k), K::upper));
            if (k >= 3) {
                auto pb = path_bounds(k);
                table.push_back(rational_report("path_lower", kp, pb.lower, K::lower));
                table.push_back(rational_report("path_upper", kp, pb.upper, K::upper));
            }
            for (int n : ns) {
                if (n < k)
                    continue;
                std::map<std::string, Rational> knp{{"k", k}, {"n", n}};
                if (k >= 5)
                    table.push_back(rational_report("cycle_count_upper", knp, cycle_count_upper(n, k), K::count_upper));
                if (k >= 6)
                    table.push_back(rational_report("kral_count_upper", knp, kral_count_upper(n, k), K::count_upper));
                if (k >= 5)
                    table.push_back(rational_report("dlg_count_upper", knp, dlg_count_upper(n, k), K::count_upper));
            }
        }
        for (int rho = 1; rho <= 4; ++rho) {
            std::map<std::string, Rational> rp{{"rho", rho}};
            table.push_back(rational_report("bipartite_ind_even", rp, bipartite_ind(rho, false), K::reference));
            table.push_back(rational_report("bipartite_ind_odd", rp, bipartite_ind(rho, true), K::reference));
        }
        table.push_back(rational_report("conj_disj_lower", {{"k", 4}, {"k_prime", 2}, {"i1", make_rational(3, 8)}, {"i2", 1}},
            conj_disj_lower(4, 2, make_rational(3, 8), 1), K::lower));
        for (auto & name : known_inducibility_names())
            table.push_back(known_inducibility(name));
        return table;
    }
}

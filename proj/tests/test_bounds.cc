#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <indlab/bounds.hh>
#include <indlab/errors.hh>

#include <boost/multiprecision/cpp_dec_float.hpp>
#include <boost/math/constants/constants.hpp>

using namespace indlab;

namespace
{
    auto near(const Decimal & a, const std::string & b, const std::string & tol) -> bool
    {
        return abs(a - Decimal{b}) <= Decimal{tol};
    }

    auto as_decimal(const Rational & q) -> Decimal
    {
        return Decimal{q.get_num().get_str()} / Decimal{q.get_den().get_str()};
    }

    auto fact(int n) -> Rational
    {
        Rational r = 1;
        for (int i = 2; i <= n; ++i)
            r *= i;
        return r;
    }

    auto pow_q(Rational b, int e) -> Rational
    {
        Rational r = 1;
        for (int i = 0; i < e; ++i)
            r *= b;
        return r;
    }
}

TEST_CASE("lower bound k!/(k^k - k)")
{
    CHECK(pg_lower(5) == make_rational(1, 26));
    CHECK(pg_lower(7) == make_rational(5, 817));
    CHECK(pg_lower(6) == make_rational(24, 1555));
    CHECK_THROWS_AS(pg_lower(1), DomainError);
    for (int k = 2; k <= 12; ++k)
        CHECK(pg_lower(k) == fact(k) / (pow_q(k, k) - k));
}

TEST_CASE("stirling form")
{
    using boost::math::constants::pi;
    using boost::math::constants::e;
    for (int k : {1, 5, 7, 10}) {
        Decimal expected = sqrt(2 * pi<Decimal>() * k) / pow(e<Decimal>(), k);
        CHECK(near(pg_lower_stirling(k), expected.str(40), "1e-40"));
    }
    CHECK(near(pg_lower_stirling(1), "0.922137008895789", "1e-15"));
    CHECK(near(pg_lower_stirling(5), "0.0377661337", "1e-10"));
    for (int k = 2; k <= 12; ++k)
        CHECK(pg_lower_stirling(k) <= as_decimal(pg_lower(k)));
}

TEST_CASE("cycle and Kral-style bounds")
{
    CHECK(kral_count_upper(12, 6) == 128);
    CHECK(kral_ind_upper(6) == make_rational(5, 162));
    CHECK(cycle_count_upper(10, 5) == Rational{2 * 10} / 5 * pow_q(make_rational(9, 4), 4));
    CHECK(near(cycle_ind_upper_pg(5), "0.2087640444", "1e-10"));
    CHECK_THROWS_AS(cycle_count_upper(4, 5), DomainError);
    CHECK_THROWS_AS(kral_ind_upper(5), DomainError);
}

TEST_CASE("double loop graph bounds")
{
    CHECK(dlg_ind_upper(5) == make_rational(3240, 3125));
    CHECK(dlg_ind_upper(5) == make_rational(648, 625));
    CHECK(dlg_ind_upper(7) == make_rational(136080, 823543));
    CHECK(near(as_decimal(dlg_ind_upper(7)), "0.165237", "5e-7"));
    CHECK(dlg_ind_upper(6) == make_rational(5, 12));
    CHECK(dlg_count_upper(7, 6) == Rational{27 * 117649} / 46656);
    CHECK(dlg_count_upper(6, 6) == 27);
    CHECK_THROWS_AS(dlg_ind_upper(4), DomainError);
    CHECK_THROWS_AS(dlg_count_upper(5, 6), DomainError);
}

TEST_CASE("count bound over binomial approaches the density bound")
{
    const long n = 1000;
    for (int k = 5; k <= 8; ++k) {
        Rational binom = 1;
        Rational prod = 1;
        for (int i = 0; i < k; ++i)
            binom = binom * (n - i) / (i + 1);
        for (int i = 1; i < k; ++i)
            prod *= 1 - Rational{i} / n;
        Rational gap = abs(dlg_count_upper(n, k) / binom - dlg_ind_upper(k));
        CHECK(gap <= dlg_ind_upper(k) * (1 - prod) / prod);
    }
}

TEST_CASE("balanced bipartite densities")
{
    CHECK(bipartite_ind(2, false) == make_rational(3, 8));
    CHECK(bipartite_ind(1, true) == make_rational(3, 4));
    CHECK(bipartite_ind(3, false) == make_rational(5, 16));
    CHECK_THROWS_AS(bipartite_ind(0, false), DomainError);
}

TEST_CASE("conjunction and disjunction")
{
    CHECK(conj_disj_lower(4, 2, make_rational(3, 8), 1) == make_rational(10, 81));
    CHECK(conj_disj_lower(3, 3, 1, 1) == make_rational(5, 16));
    CHECK(conj_disj_lower(5, 2, 0, make_rational(1, 2)) == 0);
    CHECK_THROWS_AS(conj_disj_lower(0, 2, 1, 1), DomainError);
    CHECK_THROWS_AS(conj_disj_lower(2, 2, make_rational(3, 2), 1), DomainError);
}

TEST_CASE("path bounds")
{
    auto p4 = path_bounds(4);
    CHECK(p4.lower == make_rational(6, 31));
    CHECK(p4.upper == make_rational(4, 9));
    CHECK(path_bounds(3).lower == make_rational(2, 5));
    for (int k = 3; k <= 12; ++k)
        CHECK(path_bounds(k).lower <= path_bounds(k).upper);
    CHECK_THROWS_AS(path_bounds(2), DomainError);
}

TEST_CASE("reference constants")
{
    auto k112 = known_inducibility("K112");
    REQUIRE(k112.is_exact());
    CHECK(std::get<Rational>(k112.value) == make_rational(72, 125));
    CHECK(k112.construction == "A Complete 5-equipartite Graph");
    CHECK(std::get<Rational>(known_inducibility("C5").value) == make_rational(1, 26));
    CHECK(std::get<Rational>(known_inducibility("P4_lower_evenzohar").value) == make_rational(1173, 5824));
    CHECK(std::get<Rational>(known_inducibility("P4_lower_exoo").value) == make_rational(960, 4877));
    CHECK(std::get<Rational>(known_inducibility("C4").value) == make_rational(3, 8));
    CHECK(std::get<Rational>(known_inducibility("P3").value) == make_rational(3, 4));
    CHECK(std::get<Rational>(known_inducibility("S4").value) == make_rational(1, 2));
    CHECK(std::get<Rational>(known_inducibility("paw").value) == make_rational(3, 8));
    CHECK(std::get<Rational>(known_inducibility("K3").value) == 1);
    auto vaughan = known_inducibility("P4_upper_vaughan");
    CHECK_FALSE(vaughan.is_exact());
    CHECK(near(vaughan.decimal(), "0.204513", "1e-12"));
    CHECK_THROWS_AS(known_inducibility("C6"), LookupError);
    for (auto & name : known_inducibility_names())
        CHECK_NOTHROW(known_inducibility(name));
}

TEST_CASE("gap reports")
{
    auto g5 = gap_report(5);
    CHECK(g5.ratio == make_rational(3125, 3240));
    CHECK(g5.ratio_decimal == "0.964506");
    CHECK(abs(g5.ratio - make_rational(964506, 1000000)) <= make_rational(5, 10000000));
    CHECK(g5.matches_quoted);

    auto g6 = gap_report(6);
    CHECK(g6.ratio == make_rational(27, 8));
    CHECK(g6.ratio_decimal == "3.375");
    CHECK(g6.quoted_factor == "3");
    CHECK_FALSE(g6.matches_quoted);

    auto g7 = gap_report(7);
    CHECK(g7.ratio == make_rational(136080, 823543) / make_rational(5, 817));
    CHECK(g7.matches_quoted);
    CHECK_THROWS_AS(gap_report(8), DomainError);
}

TEST_CASE("ordering and canonical form of registered bounds")
{
    for (int k = 5; k <= 10; ++k) {
        CHECK(pg_lower_stirling(k) <= as_decimal(pg_lower(k)));
        CHECK(pg_lower(k) <= dlg_ind_upper(k));
    }
    for (auto & r : bound_table(5, 10, {10, 12, 20}))
        if (auto q = std::get_if<Rational>(&r.value))
            CHECK(is_lowest_terms(*q));
}

TEST_CASE("rational helpers")
{
    CHECK(make_rational(6, 4) == make_rational(3, 2));
    CHECK(is_lowest_terms(make_rational(6, 4)));
    CHECK_THROWS_AS(make_rational(1, 0), DomainError);
    CHECK(parse_rational("3/8") == make_rational(3, 8));
    CHECK(parse_rational("0.964506") == make_rational(482253, 500000));
    CHECK(parse_rational("0964506") == 964506);
    CHECK(parse_rational("-2") == -2);
    CHECK_THROWS_AS(parse_rational("1/x"), ParseError);
    CHECK(binomial(150, 6) == BigInt{"14297000725"});
    CHECK(to_string(make_rational(10, 81)) == "10/81");
    CHECK(format_significant(make_rational(3125, 3240)) == "0.964506");
}

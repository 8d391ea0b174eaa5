#include <indlab/errors.hh>
#include <indlab/rational.hh>

#include <sstream>

namespace indlab
{
    auto make_rational(const BigInt & num, const BigInt & den) -> Rational
    {
        if (den == 0)
            throw DomainError{"rational with zero denominator"};
        Rational q{num, den};
        q.canonicalize();
        return q;
    }

    auto binomial(unsigned long n, unsigned long k) -> BigInt
    {
        BigInt result;
        if (k > n)
            return result;
        mpz_bin_uiui(result.get_mpz_t(), n, k);
        return result;
    }

    auto factorial(unsigned long n) -> BigInt
    {
        BigInt result;
        mpz_fac_ui(result.get_mpz_t(), n);
        return result;
    }

    auto power(const BigInt & base, unsigned long exponent) -> BigInt
    {
        BigInt result;
        mpz_pow_ui(result.get_mpz_t(), base.get_mpz_t(), exponent);
        return result;
    }

    auto to_decimal(const Rational & q) -> Decimal
    {
        return Decimal{q.get_num().get_str()} / Decimal{q.get_den().get_str()};
    }

    auto format_significant(const Decimal & d, int digits) -> std::string
    {
        std::ostringstream out;
        out.precision(digits);
        out << d;
        return out.str();
    }

    auto format_significant(const Rational & q, int digits) -> std::string
    {
        return format_significant(to_decimal(q), digits);
    }

    auto to_string(const BigInt & z) -> std::string
    {
        return z.get_str();
    }

    auto to_string(const Rational & q) -> std::string
    {
        return q.get_str();
    }

    auto is_lowest_terms(const Rational & q) -> bool
    {
        BigInt g;
        mpz_gcd(g.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
        return g == 1 && q.get_den() > 0;
    }

    auto parse_rational(const std::string & text) -> Rational
    {
        auto fail = [&] { return ParseError{"not a rational number: '" + text + "'"}; };
        if (text.empty())
            throw fail();

        auto parse_integer = [&](const std::string & s) -> BigInt {
            if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
                throw fail();
            return BigInt{s, 10};
        };

        bool negative = text.front() == '-';
        std::string body = negative ? text.substr(1) : text;

        Rational result;
        if (auto slash = body.find('/'); slash != std::string::npos) {
            auto den = parse_integer(body.substr(slash + 1));
            if (den == 0)
                throw fail();
            result = make_rational(parse_integer(body.substr(0, slash)), den);
        }
        else if (auto dot = body.find('.'); dot != std::string::npos) {
            auto whole = body.substr(0, dot), frac = body.substr(dot + 1);
            if (whole.empty())
                whole = "0";
            if (frac.empty())
                throw fail();
            result = make_rational(parse_integer(whole + frac), power(10, frac.size()));
        }
        else
            result = make_rational(parse_integer(body), 1);

        return negative ? Rational{-result} : result;
    }
}

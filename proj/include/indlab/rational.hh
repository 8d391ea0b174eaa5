#pragma once

#include <gmpxx.h>

#include <boost/multiprecision/cpp_dec_float.hpp>

#include <cstdint>
#include <string>

namespace indlab
{
    using BigInt = mpz_class;

    // Always held in lowest terms with a positive denominator.
    using Rational = mpq_class;

    // 50 significant decimal digits; used only where e, pi or a square root
    // make the exact value irrational.
    using Decimal = boost::multiprecision::cpp_dec_float_50;

    auto make_rational(const BigInt & num, const BigInt & den) -> Rational;

    auto binomial(unsigned long n, unsigned long k) -> BigInt;
    auto factorial(unsigned long n) -> BigInt;
    auto power(const BigInt & base, unsigned long exponent) -> BigInt;

    auto to_decimal(const Rational & q) -> Decimal;

    // Rounded to the given number of significant digits, e.g. "0.964506".
    auto format_significant(const Rational & q, int digits = 6) -> std::string;
    auto format_significant(const Decimal & d, int digits = 6) -> std::string;

    // "num/den", or just "num" when the denominator is 1.
    auto to_string(const Rational & q) -> std::string;
    auto to_string(const BigInt & z) -> std::string;

    auto is_lowest_terms(const Rational & q) -> bool;

    // Parses "3/8", "7", or a terminating decimal such as "0.5" exactly.
    auto parse_rational(const std::string & text) -> Rational;
}

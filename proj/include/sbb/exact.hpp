#pragma once

#include <cmath>
#include <string>

#include <boost/multiprecision/gmp.hpp>

#include "sbb/core.hpp"

/// Exact arbitrary-precision scalar types and their renderings.
///
/// All bound values are carried as exact rationals; decimal strings are
/// display-only. Rationals are kept in canonical form (lowest terms, positive
/// denominator) by the underlying GMP representation.
namespace sbb {

using ExactInteger = boost::multiprecision::mpz_int;
using ExactRational = boost::multiprecision::mpq_rational;

inline ExactInteger numerator(const ExactRational &q) {
    return boost::multiprecision::numerator(q);
}

inline ExactInteger denominator(const ExactRational &q) {
    return boost::multiprecision::denominator(q);
}

/// Exact rational division of two integers.
inline ExactRational ratio(const ExactInteger &num, const ExactInteger &den) {
    if (den == 0)
        throw domain_error("ratio: zero denominator");
    return ExactRational(num) / ExactRational(den);
}

/// Canonical "p/q" rendering; integers render without the "/q" part.
inline std::string rational_string(const ExactRational &q) {
    ExactInteger den = denominator(q);
    if (den == 1)
        return numerator(q).str();
    return numerator(q).str() + "/" + den.str();
}

/// Decimal rendering truncated toward zero at `places` digits; by default
/// trailing zeros (and a trailing point) are stripped. Display-only: exact
/// values must always travel alongside.
inline std::string decimal_string(const ExactRational &q, int places = 3,
                                  bool strip_trailing_zeros = true) {
    if (places < 0)
        throw domain_error("decimal_string: negative precision");
    ExactInteger num = numerator(q);
    ExactInteger den = denominator(q);
    const bool negative = num < 0;
    if (negative)
        num = -num;
    ExactInteger scale = 1;
    for (int i = 0; i < places; ++i)
        scale *= 10;
    ExactInteger scaled = num * scale / den; // truncation toward zero
    std::string digits = scaled.str();
    std::string out;
    if (places == 0) {
        out = digits;
    } else {
        if (static_cast<int>(digits.size()) <= places)
            digits.insert(digits.begin(), places + 1 - digits.size(), '0');
        out = digits.substr(0, digits.size() - places) + "." +
              digits.substr(digits.size() - places);
        if (strip_trailing_zeros) {
            while (!out.empty() && out.back() == '0')
                out.pop_back();
            if (!out.empty() && out.back() == '.')
                out.pop_back();
        }
    }
    if (negative && out.find_first_not_of("0.") != std::string::npos)
        out.insert(out.begin(), '-');
    return out;
}

/// Parse "p/q" or "p" into an exact rational (canonicalized).
inline ExactRational parse_rational(const std::string &text) {
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos)
            return ExactRational(ExactInteger(text));
        return ratio(ExactInteger(text.substr(0, slash)),
                     ExactInteger(text.substr(slash + 1)));
    } catch (const std::exception &) {
        throw domain_error("parse_rational: malformed rational '" + text + "'");
    }
}

/// Base-2 logarithm of a positive integer, in double precision. Safe for
/// magnitudes far beyond the range of double.
inline double log2_value(const ExactInteger &x) {
    if (x <= 0)
        throw domain_error("log2_value: argument must be positive");
    long exp2 = 0;
    const double mant = mpz_get_d_2exp(&exp2, x.backend().data());
    return std::log2(mant) + static_cast<double>(exp2);
}

/// Base-2 logarithm of a positive rational.
inline double log2_value(const ExactRational &q) {
    return log2_value(numerator(q)) - log2_value(denominator(q));
}

} // namespace sbb

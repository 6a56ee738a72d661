#pragma once

// Exact rational scalars used for every pattern entry.

#include <boost/multiprecision/gmp.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace gtpoly {

using Integer = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

/// Thrown for input that cannot be interpreted at all (ragged rows, bad
/// number syntax, shapes that are not partitions, ...).
class MalformedInput : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Thrown when an operation's mathematical precondition fails.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

inline bool is_integer(const Rational& q) { return denominator(q) == 1; }

inline Integer floor_of(const Rational& q) {
    Integer n = numerator(q), d = denominator(q);
    Integer f = n / d;
    if (n < 0 && f * d != n) f -= 1;
    return f;
}

inline std::int64_t to_int64(const Integer& z) {
    if (z > INT64_MAX || z < INT64_MIN) throw DomainError("integer does not fit in 64 bits");
    return z.convert_to<std::int64_t>();
}

inline std::int64_t to_int64(const Rational& q) {
    if (!is_integer(q)) throw DomainError("rational is not an integer: " + q.str());
    return to_int64(Integer(numerator(q)));
}

/// Canonical text form: "p/q" in lowest terms, integers without "/1".
inline std::string to_string(const Rational& q) {
    if (is_integer(q)) return numerator(q).str();
    return numerator(q).str() + "/" + denominator(q).str();
}

inline Rational parse_rational(std::string_view text) {
    auto parse_int = [&](std::string_view s) {
        std::size_t start = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
        if (s.size() == start) throw MalformedInput("bad rational: '" + std::string(text) + "'");
        for (std::size_t i = start; i < s.size(); ++i)
            if (s[i] < '0' || s[i] > '9') throw MalformedInput("bad rational: '" + std::string(text) + "'");
        return Integer(std::string(s[0] == '+' ? s.substr(1) : s));
    };
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_int(text));
    Integer num = parse_int(text.substr(0, slash));
    Integer den = parse_int(text.substr(slash + 1));
    if (den == 0) throw MalformedInput("zero denominator in '" + std::string(text) + "'");
    return Rational(num, den);
}

/// Largest positive rational d such that every value/d is an integer; the
/// values must not all be zero.
template <typename Range>
Rational rational_gcd(const Range& values) {
    Integer num_gcd = 0, den_lcm = 1;
    for (const Rational& v : values) {
        if (v == 0) continue;
        num_gcd = gcd(num_gcd, Integer(abs(numerator(v))));
        den_lcm = lcm(den_lcm, Integer(denominator(v)));
    }
    if (num_gcd == 0) throw DomainError("rational_gcd of all-zero values");
    return Rational(num_gcd, den_lcm);
}

}  // namespace gtpoly

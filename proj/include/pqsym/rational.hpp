#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include "errors.hpp"

namespace pqsym {

using Rational = mpq_class;
using Integer = mpz_class;

inline Rational make_rational(long num, long den = 1)
{
    if (den == 0) throw validation_error("zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline Rational pow2(unsigned k)
{
    Integer z = 1;
    mpz_mul_2exp(z.get_mpz_t(), z.get_mpz_t(), k);
    return Rational(z);
}

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

/// "p/q" in lowest terms, "p" for integers.
inline std::string to_string(const Rational& r) { return r.get_str(); }

/// Parses "p" or "p/q". Only canonical spellings are accepted (lowest terms,
/// positive denominator, no redundant sign or leading zeros).
inline Rational parse_rational(std::string_view text)
{
    const std::string s(text);
    if (s.empty()) throw validation_error("empty rational string");
    Rational r;
    if (r.set_str(s, 10) != 0) throw validation_error("malformed rational \"" + s + "\"");
    if (r.get_den() == 0) throw validation_error("zero denominator in \"" + s + "\"");
    Rational c = r;
    c.canonicalize();
    if (c.get_str() != s)
        throw validation_error("rational \"" + s + "\" is not in canonical form (expected \"" +
                               c.get_str() + "\")");
    return c;
}

} // namespace pqsym

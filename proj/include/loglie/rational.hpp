#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace loglie {

/// Exact rational number, always kept in lowest terms with positive denominator.
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational make_rational(long num, long den = 1)
{
    Rational r(num, den);
    r.canonicalize();
    return r;
}

/// "p/q", or "p" when the denominator is one.
inline std::string to_string(const Rational& r)
{
    return r.get_str();
}

/// Inverse of to_string. Throws std::invalid_argument on malformed text.
Rational rational_from_string(std::string_view text);

inline bool is_integer(const Rational& r)
{
    return r.get_den() == 1;
}

} // namespace loglie

#pragma once

#include <gmpxx.h>

#include <string>

namespace drazin {

/// Exact rational scalar.  GMP keeps values canonical: lowest terms,
/// positive denominator, arithmetic without rounding.
using Rational = mpq_class;

/// Parses "p/q" or "p" (arbitrary precision).  Throws io_error on malformed
/// input or a zero denominator.
Rational parse_rational(const std::string& text);

/// Formats as "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& q);

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

}  // namespace drazin

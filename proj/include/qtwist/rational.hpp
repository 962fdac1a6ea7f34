#pragma once

#include <gmpxx.h>
#include <string>

namespace qtwist {

// Exact rational scalars. mpq_class keeps the canonical form we rely on
// (positive denominator, reduced fraction), so it is used directly.
using Rational = mpq_class;

/// Builds a canonical rational from a possibly unreduced pair.
Rational rat(long num, long den = 1);

/// Parses "p", "-p" or "p/q" (base 10). Throws std::invalid_argument on junk.
Rational parse_rational(const std::string& text);

/// k! as an exact rational.
Rational factorial(unsigned k);

/// Generalized binomial coefficient r(r-1)...(r-k+1)/k! for rational r.
/// For integer r with 0 <= r < k the falling product hits zero, which
/// recovers the usual vanishing convention.
Rational gen_binomial(const Rational& r, unsigned k);

/// Canonical rendering: "p" when the denominator is 1, else "p/q".
std::string to_string(const Rational& r);

}  // namespace qtwist

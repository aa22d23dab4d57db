#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace orbires {

/// Exact rational number over arbitrary-precision integers. GMP keeps every
/// result of arithmetic in lowest terms with a positive denominator.
using Rational = mpq_class;
using Integer = mpz_class;

/// Parses "p" or "p/q" (optional leading sign) into a canonical Rational.
/// Throws InputError on malformed text or a zero denominator.
Rational parse_rational(std::string_view text);

/// Renders as "p" or "p/q".
std::string to_string(const Rational& q);

/// Returns r with r^k == q when such a rational exists.
bool exact_root(const Rational& q, unsigned k, Rational& root);

Rational pow(const Rational& base, unsigned exponent);

/// num/den in lowest terms (mpq_class's two-argument constructor does not
/// canonicalize).
inline Rational ratio(long num, long den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

}  // namespace orbires

#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace gdlca {

/// Arbitrary-precision integer.
using Integer = mpz_class;

/// Exact rational number, always kept canonical (positive denominator, reduced, 0 = 0/1).
using Rational = mpq_class;

/// Parses a rational literal of the form `-?digits(/digits)?`. Throws InputError on
/// anything else, including a zero denominator.
Rational parse_rational(std::string_view text);

/// Canonical decimal text: "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& value);

/// Falling factorial m (m-1) ... (m-k+1); 1 when k = 0.
Integer falling_factorial(long m, unsigned k);

/// Generalized binomial coefficient C(m, k) for any integer m.
Integer binomial(long m, unsigned k);

}  // namespace gdlca

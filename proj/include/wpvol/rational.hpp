#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace wpvol {

// Exact fraction, always canonical (lowest terms, positive denominator).
using Rational = mpq_class;

Rational make_rational(long numerator, long denominator = 1);

// Accepts "p", "p/q" and plain decimals such as "1.25" or "-0.5".
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& q);

// Correctly rounded (round-to-nearest) conversion to binary64.
double to_double(const Rational& q);

mpz_class factorial(unsigned k);

}  // namespace wpvol

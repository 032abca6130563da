#pragma once

#include <string>
#include <string_view>

#include <gmpxx.h>

namespace spg {

/// Exact rational (always canonical) and arbitrary precision integer.
using Rational = mpq_class;
using BigInt = mpz_class;

/// Parses "a", "a/b" or a finite decimal such as "0.1". Throws ParseError.
Rational parse_rational(std::string_view text);

/// Always "num/den" (den = 1 for integers).
std::string to_fraction_string(const Rational& q);

BigInt pow2(unsigned long e);

/// Smallest integer >= q / largest integer <= q.
BigInt ceil(const Rational& q);
BigInt floor(const Rational& q);

/// Approximate value, for display and sampling only.
double to_double(const Rational& q);

}  // namespace spg

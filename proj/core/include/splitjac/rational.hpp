#pragma once

#include <gmpxx.h>

#include <string>

namespace splitjac {

// Arbitrary-precision rationals, kept canonical by GMP (positive
// denominator, reduced, zero stored as 0/1).
using Rational = mpq_class;
using Integer = mpz_class;

// Parses "p/q" or "p" with optional sign. Throws std::invalid_argument on
// malformed input or zero denominator.
Rational parse_rational(const std::string& text);

// Canonical rendering, inverse of parse_rational: "p/q", or "p" when the
// denominator is 1.
std::string to_string(const Rational& r);

// r^e for e >= 0, and 1/r^|e| for e < 0 (throws std::domain_error on 0^-k).
Rational rational_pow(const Rational& r, long e);

double to_double(const Rational& r);

}  // namespace splitjac

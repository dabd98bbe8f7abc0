#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace abcroots {

using Int = mpz_class;
using Rat = mpq_class;

// floor(x^(1/s)) for x >= 0, s >= 1.  Exact: the result r satisfies
// r^s <= x < (r+1)^s.
Int integer_nth_root(const Int& x, unsigned s);

// base^exp with exp >= 0.
Int pow_int(const Int& base, unsigned exp);

bool is_perfect_power(const Int& x, unsigned s);

// Natural log of x >= 1 via mantissa/exponent split, so values far beyond
// double range stay accurate.  Relative error is a few ulp (~1e-16).
double log_big(const Int& x);

// Natural log of a positive rational.
double log_rat(const Rat& x);

// floor of a rational.
Int floor_rat(const Rat& x);

// Exact rational from a double (doubles are dyadic rationals).
Rat rat_from_double(double x);

// Parse "3/4", "0.25" or "7" into an exact rational.  Throws on garbage.
Rat parse_rat(const std::string& text);

std::string rat_to_string(const Rat& x);

} // namespace abcroots

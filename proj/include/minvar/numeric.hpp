#pragma once

#include <gmpxx.h>

#include <string>

namespace minvar {

// Canonicalized rational from an integer pair. den must be nonzero.
mpq_class make_rational(mpz_class num, mpz_class den);

// Accepts "3/4", integers, and decimal/scientific forms ("0.25", "1e-6").
// Throws std::invalid_argument on anything else.
mpq_class parse_rational(const std::string& text);

enum class Rounding { Nearest, Up };

// Renders q with the given number of significant digits, printf-%g style
// (fixed or scientific, trailing zeros stripped, exponent like e-07).
// Rounding::Up never rounds toward zero for positive values, so printed
// upper bounds remain valid bounds.
std::string decimal_string(const mpq_class& q, int significant_digits,
                           Rounding rounding = Rounding::Nearest);

// log2 of a positive integer via its exact bit length and the leading
// 128 bits of mantissa.
long double log2_mpz(const mpz_class& v);

}  // namespace minvar

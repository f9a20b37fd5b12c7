#pragma once

#include <string>

#include <gmpxx.h>

namespace jring {

using Integer = mpz_class;
using Rational = mpq_class;

// Decimal rendering; rationals come out as "p/q" in lowest terms, "p" when integral.
std::string to_string(const Integer& value);
std::string to_string(const Rational& value);

Integer parse_integer(const std::string& text);
Rational parse_rational(const std::string& text);

Integer factorial(unsigned long n);

inline bool is_integral(const Rational& value) { return value.get_den() == 1; }

}  // namespace jring

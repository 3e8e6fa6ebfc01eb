#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace hkdyn {

using Integer = mpz_class;
using Rational = mpq_class;

// Parses "p", "-p" or "p/q" into a canonical rational. Throws kParse.
Rational parse_rational(std::string_view text);

// Canonical text form: "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& value);
std::string to_string(const Integer& value);

Integer lcm(const Integer& a, const Integer& b);

// Natural logarithm of a positive rational without overflowing a double.
double log_of(const Rational& value);

}  // namespace hkdyn

#pragma once

#include <gmpxx.h>

#include <string>

namespace discform {

using Integer  = mpz_class;
using Rational = mpq_class;

// x mod 1, result in [0, 1)
Rational mod1(const Rational& x);

bool is_integer(const Rational& x);
Integer floor_int(const Rational& x);
Integer ceil_int(const Rational& x);

// base^exponent with exponent possibly negative; base != 0 for negative exponents
Rational pow_rational(const Integer& base, long exponent);

// accepts "a/b" or "a" with optional sign; throws std::invalid_argument on malformed input
Rational parse_rational(const std::string& s);
std::string rational_str(const Rational& x);

Integer lcm_int(const Integer& a, const Integer& b);

}  // namespace discform

#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace spolya {

using Integer = mpz_class;
using Rational = mpq_class;

// Parses "p/q", "p" or a plain decimal such as "-1.9" exactly.
Rational parse_rational(std::string_view text);

// Canonical form: "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

Integer lcm_of_denominators(const std::vector<Rational>& values);

// Scales a rational vector to the primitive integer vector with the same direction.
// The zero vector maps to the zero vector.
std::vector<Integer> primitive_integer_vector(const std::vector<Rational>& v);

Integer binomial(unsigned long n, unsigned long k);

}  // namespace spolya

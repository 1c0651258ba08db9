#pragma once

#include <string>
#include <string_view>

#include <gmpxx.h>

namespace qordkit {

// Arbitrary precision integers and rationals, backed by GMP. mpq_class keeps
// values canonical (lowest terms, positive denominator) after every
// arithmetic operation; values built from raw numerator/denominator pairs go
// through make_rational, which canonicalizes.
using Integer = mpz_class;
using Rational = mpq_class;

Rational make_rational(const Integer& num, const Integer& den);

// "p/q" or "p"; whitespace is not accepted.
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

bool is_integer(const Rational& q);

Integer gcd(const Integer& a, const Integer& b);
long long lcm(long long a, long long b);

} // namespace qordkit

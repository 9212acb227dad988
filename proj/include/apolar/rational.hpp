#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace apolar {

using Integer = mpz_class;
using Rational = mpq_class;
using Vector = std::vector<Rational>;

/// num/den in lowest terms. Throws DomainError when den == 0.
Rational make_rational(long num, long den = 1);
Rational make_rational(const Integer& num, const Integer& den);

/// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& q);

/// Parses "p", "-p" or "p/q" (no whitespace). Throws DomainError.
Rational parse_rational(std::string_view text);

/// a (a-1) ... (a-b+1) / b!, valid for any rational a.
Rational gen_binomial(const Rational& a, unsigned b);

/// C(n, k) for integer n (negative n allowed); zero when k < 0.
Integer binomial(long n, long k);

Integer factorial(unsigned n);

/// Multiplies by the lcm of denominators and divides by the gcd of numerators,
/// then flips sign so the first nonzero entry is positive.
std::vector<Integer> primitive_integer_vector(const Vector& v);

}  // namespace apolar

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace krawtchouk {

/// Arbitrary-precision integer used for numerators, denominators and counts.
using BigInt = boost::multiprecision::cpp_int;

/// Exact rational scalar. Always stored in lowest terms with positive
/// denominator; all arithmetic is closed and exact.
using Rational = boost::multiprecision::cpp_rational;

/// Parses "num", "-num" or "num/den" into an exact rational.
/// Throws std::invalid_argument naming the offending position on bad input,
/// and std::domain_error on a zero denominator.
Rational parse_rational(std::string_view text);

/// Formats a rational as "num" (denominator one) or "num/den". Parsing the
/// result with parse_rational gives back the identical value.
std::string to_string(const Rational& value);

/// Integer power with exact semantics; negative exponents require a nonzero
/// base and produce the exact reciprocal power.
Rational pow_rational(const Rational& base, long long exponent);

/// n! as an exact integer.
BigInt factorial(unsigned n);

/// Binomial coefficient C(n, k); throws std::domain_error when k > n.
Rational binomial(unsigned n, unsigned k);

/// Multinomial coefficient (sum parts)! / prod parts[i]!.
Rational multinomial(std::span<const unsigned> parts);
Rational multinomial(const std::vector<unsigned>& parts);

/// Parses a comma-separated list of rationals ("1,0,-2/3").
std::vector<Rational> parse_rational_list(std::string_view text);

}  // namespace krawtchouk

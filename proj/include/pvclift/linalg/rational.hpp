#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace pvclift::linalg {

/// Exact rational scalar. GMP keeps results of arithmetic in lowest terms
/// with a positive denominator; values built from raw parts go through
/// make_rational so the same holds for them.
using Rational = mpq_class;
using Integer = mpz_class;

/// num/den in lowest terms. Throws std::invalid_argument when den == 0.
Rational make_rational(const Integer& num, const Integer& den);
Rational make_rational(std::int64_t num, std::int64_t den = 1);

/// Parses "a", "-a" or "a/b". Throws std::invalid_argument on malformed input
/// or a zero denominator.
Rational parse_rational(std::string_view text);

/// Canonical lossless rendering: "num/den", or "num" when den == 1.
std::string to_string(const Rational& q);

/// Always "num/den", including "3/1". Used in certificates so every value
/// has the same shape.
std::string to_fraction_string(const Rational& q);

/// Decimal rendering with `digits` significant digits, round-half-even.
/// Display only; never used for comparisons.
std::string to_decimal(const Rational& q, int digits = 20);

Integer binomial(unsigned long n, unsigned long k);

/// base^exp for exp >= 0.
Rational power(const Rational& base, unsigned exp);

inline bool is_lowest_terms(const Rational& q) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return g == 1 && q.get_den() > 0;
}

}  // namespace pvclift::linalg

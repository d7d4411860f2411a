#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace unavail {

// Exact rational number. GMP keeps every value canonical (lowest terms,
// positive denominator) after each operation.
using Rational = mpq_class;
using Integer = mpz_class;

// Parses "p/q", an integer, or a finite decimal such as "-0.125" exactly.
// Throws std::invalid_argument on malformed text or a zero denominator.
Rational parse_rational(std::string_view text);

// "p/q", or "p" when the denominator is one.
std::string to_string(const Rational& value);

// Decimal approximation, only for human-facing reports.
double to_double(const Rational& value);

Integer floor(const Rational& value);
Integer ceil(const Rational& value);

// Converts an integer that is known to fit; throws std::overflow_error otherwise.
std::int64_t to_int64(const Integer& value);

Rational pow(const Rational& base, long exponent);

// Approximation parameter with 1/eps a positive integer.
class Eps {
 public:
  // Throws std::invalid_argument unless value is in (0,1] with 1/value integral.
  explicit Eps(Rational value);

  const Rational& value() const { return value_; }
  // 1/eps as an integer.
  long inverse() const { return inverse_; }
  // 1 + eps, the rounding base used throughout the scheduling scheme.
  Rational one_plus() const { return 1 + value_; }

 private:
  Rational value_;
  long inverse_;
};

}  // namespace unavail

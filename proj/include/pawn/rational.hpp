#pragma once

// Exact integers and rationals (GMP backed) plus the error types shared by
// the algebra layer.

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace pawn {

using Integer = mpz_class;
using Rational = mpq_class;

struct DivisionByZero : std::domain_error {
  DivisionByZero() : std::domain_error("division by zero") {}
};

/// Raised when a rational function is evaluated at one of its poles.
struct PoleError : std::domain_error {
  using std::domain_error::domain_error;
};

/// Raised by exact division when the divisor does not divide.
struct NotDivisible : std::domain_error {
  using std::domain_error::domain_error;
};

/// "p/r" or "p" in lowest terms.
std::string to_string(const Rational& r);

/// Parses "p/r" or "p"; throws std::invalid_argument on malformed input
/// and DivisionByZero on a zero denominator.
Rational parse_rational(std::string_view text);

Integer binomial(unsigned long n, unsigned long k);
Integer factorial(unsigned long n);

}  // namespace pawn

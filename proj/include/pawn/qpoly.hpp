#pragma once

// Dense univariate polynomials in q with rational coefficients.

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "pawn/rational.hpp"

namespace pawn {

class QPoly {
 public:
  QPoly() = default;
  QPoly(const Rational& c);  // NOLINT: constants convert implicitly
  QPoly(long c) : QPoly(Rational(c)) {}  // NOLINT
  explicit QPoly(std::vector<Rational> coeffs);
  QPoly(std::initializer_list<long> coeffs);

  static QPoly monomial(const Rational& c, std::size_t exp);
  static QPoly q() { return monomial(1, 1); }
  /// q^n - 1 for n >= 0.
  static QPoly q_power_minus_one(std::size_t n);

  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  /// Lowest exponent with a nonzero coefficient; 0 for the zero polynomial.
  std::size_t valuation() const;
  const Rational& coeff(std::size_t exp) const;
  const Rational& leading() const;
  std::span<const Rational> coeffs() const { return coeffs_; }

  QPoly& operator+=(const QPoly& o);
  QPoly& operator-=(const QPoly& o);
  QPoly& operator*=(const QPoly& o);
  QPoly& operator*=(const Rational& c);

  friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
  friend QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }
  friend QPoly operator*(const QPoly& a, const QPoly& b);
  friend QPoly operator*(QPoly a, const Rational& c) { return a *= c; }
  friend QPoly operator*(const Rational& c, QPoly a) { return a *= c; }
  QPoly operator-() const;

  friend bool operator==(const QPoly&, const QPoly&) = default;

  /// Multiplies by q^k.
  QPoly shifted(std::size_t k) const;
  /// Divides by q^k; the low coefficients must vanish.
  QPoly unshifted(std::size_t k) const;
  /// q^d p(1/q) where d = degree().
  QPoly reversed() const;
  QPoly monic() const;
  QPoly derivative() const;

  /// Rational c with p/c primitive over Z and of positive leading
  /// coefficient. Zero for the zero polynomial.
  Rational content() const;
  QPoly primitive_part() const;

  Rational eval(const Rational& at) const;

  std::string to_string(char var = 'q') const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// Quotient and remainder; divisor must be nonzero.
std::pair<QPoly, QPoly> divmod(const QPoly& a, const QPoly& b);
/// Exact division; throws NotDivisible on a nonzero remainder.
QPoly exact_div(const QPoly& a, const QPoly& b);
bool divides(const QPoly& d, const QPoly& p);
/// Monic gcd (zero iff both inputs are zero).
QPoly gcd(const QPoly& a, const QPoly& b);
QPoly pow(const QPoly& p, unsigned e);

/// [n]_q as a polynomial, n >= 0.
QPoly q_integer_poly(std::size_t n);

}  // namespace pawn

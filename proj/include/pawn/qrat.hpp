#pragma once

// Reduced rational functions in q over Q.
//
// Invariant: gcd(num, den) = 1 and den is monic, so equality is a
// structural comparison. Negative powers of q are never stored: q^-k is
// represented as 1/q^k.

#include <string>

#include "pawn/qpoly.hpp"

namespace pawn {

class QRat {
 public:
  QRat() : den_(1) {}
  QRat(const Rational& c) : num_(c), den_(1) {}  // NOLINT
  QRat(long c) : QRat(Rational(c)) {}            // NOLINT
  QRat(const QPoly& p) : num_(p), den_(1) {}     // NOLINT
  /// Reduces num/den; throws DivisionByZero when den is zero.
  QRat(QPoly num, QPoly den);

  static QRat q() { return QRat(QPoly::q()); }
  /// q^k for any integer k.
  static QRat q_power(long k);

  const QPoly& num() const { return num_; }
  const QPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.degree() == 0; }
  bool is_constant() const { return num_.is_constant() && den_.degree() == 0; }
  /// Constant value; throws std::logic_error if not constant.
  Rational constant_value() const;

  QRat& operator+=(const QRat& o);
  QRat& operator-=(const QRat& o);
  QRat& operator*=(const QRat& o);
  QRat& operator/=(const QRat& o);

  friend QRat operator+(QRat a, const QRat& b) { return a += b; }
  friend QRat operator-(QRat a, const QRat& b) { return a -= b; }
  friend QRat operator*(QRat a, const QRat& b) { return a *= b; }
  friend QRat operator/(QRat a, const QRat& b) { return a /= b; }
  QRat operator-() const;

  friend bool operator==(const QRat&, const QRat&) = default;

  QRat inverse() const;
  QRat pow(long e) const;

  /// f(1/q), reduced.
  QRat reciprocal() const;
  /// Value at q = at; throws PoleError if `at` is a pole of the reduced form.
  Rational eval(const Rational& at) const;

  std::string to_string() const;

 private:
  struct Reduced {};
  QRat(QPoly num, QPoly den, Reduced) : num_(std::move(num)), den_(std::move(den)) {}
  void normalize();

  QPoly num_;
  QPoly den_;
};

/// [n]_q = (q^n - 1)/(q - 1) for any integer n.
QRat q_integer(long n);

}  // namespace pawn

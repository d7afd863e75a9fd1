#pragma once

// Polynomials in x with coefficients in Q(q): the coefficient ring of the
// tree series studied here.

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "pawn/qrat.hpp"

namespace pawn {

class XPoly {
 public:
  XPoly() = default;
  XPoly(const QRat& c);  // NOLINT
  XPoly(long c) : XPoly(QRat(c)) {}  // NOLINT
  explicit XPoly(std::vector<QRat> coeffs);

  /// The indeterminate x.
  static XPoly x();
  /// a + b x
  static XPoly linear(const QRat& a, const QRat& b);

  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const QRat& coeff(std::size_t exp) const;
  const QRat& leading() const;
  std::span<const QRat> coeffs() const { return coeffs_; }

  XPoly& operator+=(const XPoly& o);
  XPoly& operator-=(const XPoly& o);
  XPoly& operator*=(const XPoly& o);
  XPoly& operator*=(const QRat& c);

  friend XPoly operator+(XPoly a, const XPoly& b) { return a += b; }
  friend XPoly operator-(XPoly a, const XPoly& b) { return a -= b; }
  friend XPoly operator*(const XPoly& a, const XPoly& b);
  friend XPoly operator*(XPoly a, const QRat& c) { return a *= c; }
  friend XPoly operator*(const QRat& c, XPoly a) { return a *= c; }
  XPoly operator-() const;

  friend bool operator==(const XPoly&, const XPoly&) = default;

  QRat eval(const QRat& at) const;
  /// f(a + b x).
  XPoly compose_affine(const QRat& a, const QRat& b) const;
  /// f(1 + q x).
  XPoly substitute_one_plus_qx() const;
  /// Exact division by a + b x (b != 0); throws NotDivisible otherwise.
  XPoly divide_linear(const QRat& a, const QRat& b) const;
  /// Exact division by 1 + q x.
  XPoly divide_one_plus_qx() const;
  XPoly derivative() const;
  /// Applies g to every coefficient.
  XPoly map_coefficients(const std::function<QRat(const QRat&)>& g) const;

  std::string to_string() const;

 private:
  void trim();
  std::vector<QRat> coeffs_;
};

XPoly pow(const XPoly& p, unsigned e);

}  // namespace pawn

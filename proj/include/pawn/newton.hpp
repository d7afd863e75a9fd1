#pragma once

// Bivariate numerators and their Newton polygons. Axes: q-degree is the
// horizontal coordinate, x-degree the vertical one.

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "pawn/qpoly.hpp"
#include "pawn/xpoly.hpp"

namespace pawn {

struct LatticePoint {
  long q_deg = 0;
  long x_deg = 0;
  friend auto operator<=>(const LatticePoint&, const LatticePoint&) = default;
};

class BivarIntPoly {
 public:
  BivarIntPoly() = default;
  /// Terms with zero coefficients are dropped.
  explicit BivarIntPoly(std::map<std::pair<unsigned, unsigned>, Rational> terms);

  bool is_zero() const { return terms_.empty(); }
  /// Keyed by (q-exponent, x-exponent).
  const std::map<std::pair<unsigned, unsigned>, Rational>& terms() const { return terms_; }
  std::vector<LatticePoint> exponents() const;
  /// Coefficient of x^j as a polynomial in q.
  QPoly x_coefficient(unsigned j) const;
  XPoly to_xpoly() const;

  friend bool operator==(const BivarIntPoly&, const BivarIntPoly&) = default;

 private:
  std::map<std::pair<unsigned, unsigned>, Rational> terms_;
};

struct XPolyFraction {
  BivarIntPoly numerator;
  QPoly denominator;  // monic, lcm of the coefficient denominators
};

/// Writes f = N(q, x) / D(q) with D the monic lcm of the denominators of
/// the x-coefficients, so that N and D are coprime.
XPolyFraction split_numerator(const XPoly& f);

QPoly lcm(const QPoly& a, const QPoly& b);

class NewtonPolygon {
 public:
  /// Convex hull of the exponents of p; throws std::invalid_argument on p = 0.
  explicit NewtonPolygon(const BivarIntPoly& p);
  explicit NewtonPolygon(std::vector<LatticePoint> points);

  /// Counterclockwise hull vertices starting from the lowest, then
  /// leftmost, point; no three collinear.
  const std::vector<LatticePoint>& vertices() const { return vertices_; }
  long min_x_deg() const;
  long max_x_deg() const;
  /// Smallest / largest q-degree of the polygon on the line x-degree = h;
  /// empty when the line misses the polygon.
  std::optional<Rational> left_at(long h) const;
  std::optional<Rational> right_at(long h) const;

 private:
  std::optional<std::pair<Rational, Rational>> span_at(long h) const;
  std::vector<LatticePoint> vertices_;
};

}  // namespace pawn

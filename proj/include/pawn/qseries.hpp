#pragma once

// Power series in q truncated after q^order.

#include <cstddef>
#include <limits>
#include <span>
#include <string>
#include <vector>

#include "pawn/qrat.hpp"

namespace pawn {

class QSeries {
 public:
  static constexpr std::size_t kExact = std::numeric_limits<std::size_t>::max();

  /// Zero, compatible with any truncation order.
  QSeries() = default;
  /// Exact constant.
  QSeries(const Rational& c);  // NOLINT
  QSeries(long c) : QSeries(Rational(c)) {}  // NOLINT
  QSeries(std::vector<Rational> coeffs, std::size_t order);

  /// Expansion of f at q = 0 to O(q^(order+1)); throws PoleError if the
  /// reduced denominator vanishes at q = 0.
  static QSeries from_qrat(const QRat& f, std::size_t order);

  std::size_t order() const { return order_; }
  bool is_zero() const;
  const Rational& coeff(std::size_t exp) const;
  /// order()+1 coefficients (order() must be finite).
  std::vector<Rational> coefficients() const;

  QSeries& operator+=(const QSeries& o);
  QSeries& operator-=(const QSeries& o);
  friend QSeries operator+(QSeries a, const QSeries& b) { return a += b; }
  friend QSeries operator-(QSeries a, const QSeries& b) { return a -= b; }
  friend QSeries operator*(const QSeries& a, const QSeries& b);
  QSeries& operator*=(const QSeries& o) { return *this = *this * o; }
  QSeries operator-() const;

  friend bool operator==(const QSeries& a, const QSeries& b);

  std::string to_string() const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
  std::size_t order_ = kExact;
};

}  // namespace pawn

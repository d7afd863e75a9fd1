#include "pawn/qrat.hpp"

#include <stdexcept>

namespace pawn {

QRat::QRat(QPoly num, QPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw DivisionByZero();
  normalize();
}

void QRat::normalize() {
  if (num_.is_zero()) {
    den_ = QPoly(1);
    return;
  }
  if (!den_.is_constant()) {
    QPoly g = gcd(num_, den_);
    if (!g.is_constant()) {
      num_ = exact_div(num_, g);
      den_ = exact_div(den_, g);
    }
  }
  const Rational lc = den_.leading();
  if (lc != 1) {
    const Rational inv = 1 / lc;
    num_ *= inv;
    den_ *= inv;
  }
}

QRat QRat::q_power(long k) {
  if (k >= 0) return QRat(QPoly::monomial(1, static_cast<std::size_t>(k)));
  return QRat(QPoly(1), QPoly::monomial(1, static_cast<std::size_t>(-k)), Reduced{});
}

Rational QRat::constant_value() const {
  if (!is_constant()) throw std::logic_error("rational function is not constant: " + to_string());
  return num_.coeff(0);
}

// Henrici-style addition: only the gcd of the denominators and one
// follow-up gcd are needed.
QRat& QRat::operator+=(const QRat& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (den_.is_constant() && o.den_.is_constant()) {
    num_ += o.num_;
    return *this;
  }
  if (den_ == o.den_) {
    num_ += o.num_;
    normalize();
    return *this;
  }
  const QPoly g = gcd(den_, o.den_);
  if (g.is_constant()) {
    QPoly n = num_ * o.den_ + o.num_ * den_;
    QPoly d = den_ * o.den_;
    *this = QRat(std::move(n), std::move(d), Reduced{});
    if (num_.is_zero()) den_ = QPoly(1);
    return *this;
  }
  const QPoly b1 = exact_div(den_, g);
  const QPoly d1 = exact_div(o.den_, g);
  QPoly n = num_ * d1 + o.num_ * b1;
  if (n.is_zero()) return *this = QRat();
  const QPoly g2 = gcd(n, g);
  QPoly d = b1 * o.den_;
  if (!g2.is_constant()) {
    n = exact_div(n, g2);
    d = exact_div(d, g2);
  }
  num_ = std::move(n);
  den_ = std::move(d);
  const Rational lc = den_.leading();
  if (lc != 1) {
    num_ *= 1 / lc;
    den_ *= 1 / lc;
  }
  return *this;
}

QRat& QRat::operator-=(const QRat& o) { return *this += -o; }

QRat& QRat::operator*=(const QRat& o) {
  if (is_zero() || o.is_zero()) return *this = QRat();
  if (den_.is_constant() && o.den_.is_constant()) {
    num_ *= o.num_;
    return *this;
  }
  QPoly a = num_, b = den_, c = o.num_, d = o.den_;
  const QPoly g1 = gcd(a, d);
  if (!g1.is_constant()) {
    a = exact_div(a, g1);
    d = exact_div(d, g1);
  }
  const QPoly g2 = gcd(c, b);
  if (!g2.is_constant()) {
    c = exact_div(c, g2);
    b = exact_div(b, g2);
  }
  num_ = a * c;
  den_ = b * d;
  const Rational lc = den_.leading();
  if (lc != 1) {
    num_ *= 1 / lc;
    den_ *= 1 / lc;
  }
  return *this;
}

QRat& QRat::operator/=(const QRat& o) { return *this *= o.inverse(); }

QRat QRat::operator-() const { return QRat(-num_, den_, Reduced{}); }

QRat QRat::inverse() const {
  if (is_zero()) throw DivisionByZero();
  QRat r(den_, num_, Reduced{});
  const Rational lc = r.den_.leading();
  if (lc != 1) {
    r.num_ *= 1 / lc;
    r.den_ *= 1 / lc;
  }
  return r;
}

QRat QRat::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  QRat r(pawn::pow(num_, static_cast<unsigned>(e)), pawn::pow(den_, static_cast<unsigned>(e)), Reduced{});
  return r;
}

QRat QRat::reciprocal() const {
  // num(1/q) = q^-dn rev(num), den(1/q) = q^-dd rev(den).
  if (is_zero()) return *this;
  const int dn = num_.degree();
  const int dd = den_.degree();
  QPoly n = num_.reversed();
  QPoly d = den_.reversed();
  if (dd > dn)
    n = n.shifted(static_cast<std::size_t>(dd - dn));
  else if (dn > dd)
    d = d.shifted(static_cast<std::size_t>(dn - dd));
  return QRat(std::move(n), std::move(d));
}

Rational QRat::eval(const Rational& at) const {
  const Rational d = den_.eval(at);
  if (d == 0) throw PoleError("pole at q = " + pawn::to_string(at) + " of " + to_string());
  return num_.eval(at) / d;
}

std::string QRat::to_string() const {
  if (den_.degree() == 0) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

QRat q_integer(long n) {
  if (n >= 0) return QRat(q_integer_poly(static_cast<std::size_t>(n)));
  // (q^n - 1)/(q - 1) = -(1 + q + ... + q^(|n|-1)) / q^|n|
  const auto m = static_cast<std::size_t>(-n);
  return QRat(-q_integer_poly(m), QPoly::monomial(1, m));
}

}  // namespace pawn

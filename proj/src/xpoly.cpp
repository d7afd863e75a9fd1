#include "pawn/xpoly.hpp"

#include <sstream>

namespace pawn {

namespace {
const QRat& zero_qrat() {
  static const QRat z;
  return z;
}
}  // namespace

XPoly::XPoly(const QRat& c) {
  if (!c.is_zero()) coeffs_.push_back(c);
}

XPoly::XPoly(std::vector<QRat> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

XPoly XPoly::x() { return XPoly(std::vector<QRat>{QRat(), QRat(1)}); }

XPoly XPoly::linear(const QRat& a, const QRat& b) { return XPoly(std::vector<QRat>{a, b}); }

void XPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

const QRat& XPoly::coeff(std::size_t exp) const {
  return exp < coeffs_.size() ? coeffs_[exp] : zero_qrat();
}

const QRat& XPoly::leading() const { return coeffs_.empty() ? zero_qrat() : coeffs_.back(); }

XPoly& XPoly::operator+=(const XPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

XPoly& XPoly::operator-=(const XPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

XPoly operator*(const XPoly& a, const XPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<QRat> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return XPoly(std::move(out));
}

XPoly& XPoly::operator*=(const XPoly& o) { return *this = *this * o; }

XPoly& XPoly::operator*=(const QRat& c) {
  if (c.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  for (auto& a : coeffs_) a *= c;
  return *this;
}

XPoly XPoly::operator-() const {
  XPoly r = *this;
  for (auto& a : r.coeffs_) a = -a;
  return r;
}

QRat XPoly::eval(const QRat& at) const {
  QRat acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= at;
    acc += *it;
  }
  return acc;
}

XPoly XPoly::compose_affine(const QRat& a, const QRat& b) const {
  const XPoly inner = linear(a, b);
  XPoly acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= inner;
    acc += XPoly(*it);
  }
  return acc;
}

XPoly XPoly::substitute_one_plus_qx() const { return compose_affine(QRat(1), QRat::q()); }

XPoly XPoly::divide_linear(const QRat& a, const QRat& b) const {
  if (b.is_zero()) throw DivisionByZero();
  if (is_zero()) return {};
  // Synthetic division from the top: f = (a + b x) g.
  const std::size_t n = coeffs_.size() - 1;
  if (n == 0) throw NotDivisible("constant is not divisible by a linear polynomial");
  std::vector<QRat> g(n);
  const QRat inv_b = b.inverse();
  QRat carry = coeffs_[n];
  for (std::size_t k = n; k-- > 0;) {
    g[k] = carry * inv_b;
    carry = coeffs_[k] - a * g[k];
  }
  if (!carry.is_zero()) throw NotDivisible("polynomial in x is not divisible by " + linear(a, b).to_string());
  return XPoly(std::move(g));
}

XPoly XPoly::divide_one_plus_qx() const { return divide_linear(QRat(1), QRat::q()); }

XPoly XPoly::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<QRat> d(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * QRat(static_cast<long>(i));
  return XPoly(std::move(d));
}

XPoly XPoly::map_coefficients(const std::function<QRat(const QRat&)>& g) const {
  std::vector<QRat> out;
  out.reserve(coeffs_.size());
  for (const auto& c : coeffs_) out.push_back(g(c));
  return XPoly(std::move(out));
}

std::string XPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].is_zero()) continue;
    if (!first) out << " + ";
    first = false;
    out << '(' << coeffs_[i].to_string() << ')';
    if (i == 1) out << "*x";
    if (i > 1) out << "*x^" << i;
  }
  return out.str();
}

XPoly pow(const XPoly& p, unsigned e) {
  XPoly result(1);
  for (unsigned i = 0; i < e; ++i) result *= p;
  return result;
}

}  // namespace pawn

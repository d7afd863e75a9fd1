#include "pawn/qseries.hpp"

#include <algorithm>
#include <sstream>

namespace pawn {

namespace {
const Rational& zero_rational() {
  static const Rational z(0);
  return z;
}
}  // namespace

QSeries::QSeries(const Rational& c) {
  if (c != 0) coeffs_.push_back(c);
}

QSeries::QSeries(std::vector<Rational> coeffs, std::size_t order) : coeffs_(std::move(coeffs)), order_(order) {
  trim();
}

void QSeries::trim() {
  if (order_ != kExact && coeffs_.size() > order_ + 1) coeffs_.resize(order_ + 1);
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

QSeries QSeries::from_qrat(const QRat& f, std::size_t order) {
  const QPoly& den = f.den();
  const Rational d0 = den.coeff(0);
  if (d0 == 0) throw PoleError("series expansion: denominator vanishes at q = 0 in " + f.to_string());
  // Solve den * s = num coefficient by coefficient.
  std::vector<Rational> s(order + 1, Rational(0));
  const Rational inv = 1 / d0;
  for (std::size_t k = 0; k <= order; ++k) {
    Rational acc = f.num().coeff(k);
    const std::size_t top = std::min<std::size_t>(k, static_cast<std::size_t>(den.degree()));
    for (std::size_t j = 1; j <= top; ++j) acc -= den.coeff(j) * s[k - j];
    s[k] = acc * inv;
  }
  return QSeries(std::move(s), order);
}

bool QSeries::is_zero() const { return coeffs_.empty(); }

const Rational& QSeries::coeff(std::size_t exp) const {
  return exp < coeffs_.size() ? coeffs_[exp] : zero_rational();
}

std::vector<Rational> QSeries::coefficients() const {
  std::vector<Rational> out(order_ == kExact ? coeffs_.size() : order_ + 1, Rational(0));
  std::copy(coeffs_.begin(), coeffs_.end(), out.begin());
  return out;
}

QSeries& QSeries::operator+=(const QSeries& o) {
  order_ = std::min(order_, o.order_);
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

QSeries& QSeries::operator-=(const QSeries& o) { return *this += -o; }

QSeries operator*(const QSeries& a, const QSeries& b) {
  const std::size_t order = std::min(a.order_, b.order_);
  if (a.is_zero() || b.is_zero()) return QSeries({}, order);
  std::size_t len = a.coeffs_.size() + b.coeffs_.size() - 1;
  if (order != QSeries::kExact) len = std::min(len, order + 1);
  std::vector<Rational> out(len, Rational(0));
  for (std::size_t i = 0; i < a.coeffs_.size() && i < len; ++i)
    for (std::size_t j = 0; j < b.coeffs_.size() && i + j < len; ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return QSeries(std::move(out), order);
}

QSeries QSeries::operator-() const {
  QSeries r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

bool operator==(const QSeries& a, const QSeries& b) {
  // Compared up to the common truncation order.
  const std::size_t order = std::min(a.order_, b.order_);
  const std::size_t n = std::max(a.coeffs_.size(), b.coeffs_.size());
  for (std::size_t i = 0; i < n && (order == QSeries::kExact || i <= order); ++i)
    if (a.coeff(i) != b.coeff(i)) return false;
  return true;
}

std::string QSeries::to_string() const {
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    if (!first) out << " + ";
    first = false;
    out << pawn::to_string(coeffs_[i]);
    if (i > 0) out << "*q^" << i;
  }
  if (first) out << '0';
  if (order_ != kExact) out << " + O(q^" << order_ + 1 << ")";
  return out.str();
}

}  // namespace pawn

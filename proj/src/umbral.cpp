#include "pawn/umbral.hpp"

#include <deque>
#include <mutex>

namespace pawn {

namespace {

class CarlitzTable {
 public:
  const QRat& get(std::size_t k) {
    std::lock_guard lock(mutex_);
    while (values_.size() <= k) extend();
    return values_[k];
  }

 private:
  // (q^(n+1) - 1) beta_n = [n = 1] - q sum_{k<n} binom(n,k) q^k beta_k
  void extend() {
    const std::size_t n = values_.size();
    if (n == 0) {
      values_.emplace_back(1);
      return;
    }
    QRat acc;
    for (std::size_t k = 0; k < n; ++k)
      acc += QRat(Rational(binomial(n, k))) * QRat::q_power(static_cast<long>(k)) * values_[k];
    QRat rhs = (n == 1 ? QRat(1) : QRat()) - QRat::q() * acc;
    values_.push_back(rhs / QRat(QPoly::q_power_minus_one(n + 1)));
  }

  std::mutex mutex_;
  std::deque<QRat> values_;  // references stay valid while growing
};

CarlitzTable& carlitz() {
  static CarlitzTable t;
  return t;
}

}  // namespace

const QRat& bernoulli_carlitz(std::size_t k) { return carlitz().get(k); }

QRat psi_umbral(const XPoly& p) {
  QRat acc;
  for (std::size_t j = 0; j < p.coeffs().size(); ++j)
    if (!p.coeffs()[j].is_zero()) acc += p.coeffs()[j] * bernoulli_carlitz(j);
  return acc;
}

XPoly hahn_delta(const XPoly& f) {
  const XPoly diff = f.substitute_one_plus_qx() - f;
  return diff.divide_linear(QRat(1), QRat::q() - QRat(1));
}

XPoly hahn_inverse(const XPoly& g) {
  if (g.is_zero()) return {};
  const auto d = static_cast<std::size_t>(g.degree());
  // Delta lowers degree by one with leading factor [j]_q on x^j, so solve
  // from the top degree down.
  std::vector<QRat> h(d + 2);
  XPoly residual = g;
  for (std::size_t j = d + 1; j >= 1; --j) {
    const QRat& top = residual.coeff(j - 1);
    if (!top.is_zero()) {
      h[j] = top / q_integer(static_cast<long>(j));
      std::vector<QRat> mono(j + 1);
      mono[j] = QRat(1);
      residual -= hahn_delta(XPoly(std::move(mono))) * h[j];
    }
  }
  XPoly f(std::move(h));
  // Fix the constant so that f vanishes at x = -1/q.
  const QRat at = f.eval(-QRat::q_power(-1));
  return f - XPoly(at);
}

}  // namespace pawn

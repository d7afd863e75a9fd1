#include "pawn/series.hpp"

#include <deque>
#include <map>
#include <mutex>
#include <tuple>

namespace pawn {

namespace {

XPoly one_plus_qm1_x() { return XPoly::linear(QRat(1), QRat::q() - QRat(1)); }

PawnRecursion<XPoly>& pawn_memo() {
  static PawnRecursion<XPoly> r(one_plus_qm1_x(), [](const QRat& c) { return XPoly(c); });
  return r;
}

QRat omega_rule(Tree t, const MemoSeries<QRat>::Lookup& get) {
  const auto n = static_cast<long>(t.size());
  QRat acc;
  for (const auto& e : prune_leaf_subsets(t)) {
    if (e.removed == 0) continue;
    acc -= QRat(e.count) * QRat::q_power(n - static_cast<long>(e.removed)) * get(e.rest);
  }
  if (t.children().size() == 1) acc += get(t.children()[0]);
  if (t.is_vertex()) acc += QRat::q() - QRat(1);
  return acc / QRat(QPoly::q_power_minus_one(static_cast<std::size_t>(n)));
}

QRat omega_bar_rule(Tree t, const MemoSeries<QRat>::Lookup& get) {
  const auto n = static_cast<long>(t.size());
  QRat acc;
  for (const auto& e : prune_leaf_subsets(t)) {
    if (e.removed == 0) continue;
    const long sign = (e.removed % 2 == 0) ? 1 : -1;
    acc += QRat(sign * e.count) * get(e.rest);
  }
  if (t.children().size() == 1) acc += QRat::q_power(n - 1) * get(t.children()[0]);
  if (t.is_vertex()) acc += QRat::q() - QRat(1);
  return acc / QRat(QPoly::q_power_minus_one(static_cast<std::size_t>(n)));
}

MemoSeries<QRat>& omega_memo() {
  static MemoSeries<QRat> m(omega_rule);
  return m;
}

MemoSeries<QRat>& omega_bar_memo() {
  static MemoSeries<QRat> m(omega_bar_rule);
  return m;
}

class ColoringTable {
 public:
  const QPoly& get(Tree t, long n, ColoringMode mode) {
    static const QPoly zero;
    if (n < 0) return zero;
    const auto key = std::make_tuple(t.id(), n, mode == ColoringMode::strict);
    {
      std::lock_guard lock(mutex_);
      if (auto it = index_.find(key); it != index_.end()) return *it->second;
    }
    // Root colored j: children are colored below j (strict) or up to j (weak).
    QPoly value;
    for (long j = 0; j <= n; ++j) {
      QPoly term = QPoly::monomial(1, static_cast<std::size_t>(j));
      const long child_bound = mode == ColoringMode::weak ? j : j - 1;
      for (Tree c : t.children()) {
        term *= get(c, child_bound, mode);
        if (term.is_zero()) break;
      }
      value += term;
    }
    std::lock_guard lock(mutex_);
    auto [it, inserted] = index_.try_emplace(key, nullptr);
    if (inserted) {
      storage_.push_back(std::move(value));
      it->second = &storage_.back();
    }
    return *it->second;
  }

 private:
  std::mutex mutex_;
  std::deque<QPoly> storage_;
  std::map<std::tuple<TreeId, long, bool>, const QPoly*> index_;
};

ColoringTable& coloring_table() {
  static ColoringTable t;
  return t;
}

class CorollaTable {
 public:
  const XPoly& get(std::size_t n) {
    std::lock_guard lock(mutex_);
    while (values_.size() <= n) extend();
    return values_[n];
  }

 private:
  // (q^(n+1) - 1) c_n = sum_{k<n} (-1)^(n-k) binom(n,k) c_k
  //                    + q^(n+1) (1 + (q-1)x) (1 + q x)^n - [n = 0]
  void extend() {
    const std::size_t n = values_.size();
    XPoly acc;
    for (std::size_t k = 0; k < n; ++k) {
      const long sign = ((n - k) % 2 == 0) ? 1 : -1;
      acc += values_[k] * QRat(Rational(binomial(n, k) * sign));
    }
    acc += one_plus_qm1_x() * pow(XPoly::linear(QRat(1), QRat::q()), static_cast<unsigned>(n)) *
           QRat::q_power(static_cast<long>(n + 1));
    if (n == 0) acc -= XPoly(1);
    values_.push_back(acc * QRat(QPoly(1), QPoly::q_power_minus_one(n + 1)));
  }

  std::mutex mutex_;
  std::deque<XPoly> values_;
};

CorollaTable& corolla_table() {
  static CorollaTable t;
  return t;
}

}  // namespace

const XPoly& pawn_coefficient(Tree t) { return pawn_memo().coefficient(t); }

TreeSeries<XPoly> solve_pawn(std::size_t order, unsigned workers) { return pawn_memo().series(order, workers); }

TreeSeries<QRat> solve_pawn_at(const QRat& x, std::size_t order) {
  PawnRecursion<QRat> r(QRat(1) + (QRat::q() - QRat(1)) * x, [](const QRat& c) { return c; });
  return r.series(order);
}

TreeSeries<QSeries> solve_pawn_in_series(const QSeries& x, std::size_t order, std::size_t m) {
  auto lift = [m](const QRat& c) { return QSeries::from_qrat(c, m); };
  PawnRecursion<QSeries> r(lift(QRat(1)) + lift(QRat::q() - QRat(1)) * x, lift);
  return r.series(order);
}

TreeSeries<QRat> series_E(std::size_t order) {
  TreeSeries<QRat> e(order);
  for (Tree t : trees_up_to(order)) e.set(t, QRat(1));
  return e;
}

const QPoly& coloring_poly(Tree t, long n, ColoringMode mode) { return coloring_table().get(t, n, mode); }

TreeSeries<QRat> coloring_series(std::size_t order, long n, ColoringMode mode) {
  TreeSeries<QRat> s(order);
  for (Tree t : trees_up_to(order)) s.set(t, QRat(coloring_poly(t, n, mode)));
  return s;
}

TreeSeries<QRat> eval_pawn_at_qint(const TreeSeries<XPoly>& pawn, long n) {
  const QRat at = q_integer(n);
  return pawn.map<QRat>([&](const XPoly& p) { return p.eval(at); });
}

XPoly pawn_linear(std::size_t n) {
  if (n == 0) throw std::invalid_argument("pawn_linear needs n >= 1");
  XPoly p = XPoly::linear(QRat(1), QRat::q());
  for (std::size_t i = 2; i <= n; ++i) {
    const QRat qi = q_integer(static_cast<long>(i));
    p *= XPoly::linear(qi, QRat::q_power(static_cast<long>(i)));
    p *= qi.inverse();
  }
  return p;
}

const XPoly& pawn_corolla(std::size_t n) { return corolla_table().get(n); }

const QRat& omega_coefficient(Tree t) { return omega_memo().coefficient(t); }
TreeSeries<QRat> solve_omega(std::size_t order, unsigned workers) { return omega_memo().series(order, workers); }
const QRat& omega_bar_coefficient(Tree t) { return omega_bar_memo().coefficient(t); }
TreeSeries<QRat> solve_omega_bar(std::size_t order, unsigned workers) {
  return omega_bar_memo().series(order, workers);
}

TreeSeries<QRat> omega_bar_via_reflection(const TreeSeries<QRat>& omega) {
  const TreeSeries<QRat> reflected = omega.map<QRat>([](const QRat& c) { return c.reciprocal(); });
  return suspension(reflected, -QRat::q_power(-1));
}

TreeSeries<QRat> limit_minus_one_over_q(const TreeSeries<XPoly>& pawn) {
  const QRat at = -QRat::q_power(-1);
  return pawn.map<QRat>([&](const XPoly& p) { return p.divide_one_plus_qx().eval(at); });
}

TreeSeries<QRat> pawn_x_infinity(const TreeSeries<XPoly>& pawn) {
  return pawn.map_with_tree<QRat>([](Tree t, const XPoly& p) { return p.coeff(t.size()); });
}

QSeries pawn_one_minus_q_inverse(std::size_t k, std::size_t m) {
  const QRat at(QPoly(1), QPoly{1, -1});
  return QSeries::from_qrat(pawn_corolla(k).eval(at), m);
}

QSeries corolla_coloring_sum(std::size_t k, std::size_t m) {
  // Terms with j > m + 1 start at q^(m+1) and are truncated away.
  QSeries acc(std::vector<Rational>{}, m);
  for (std::size_t j = 1; j <= m + 1; ++j) {
    const QSeries qj(std::vector<Rational>(j, Rational(1)), m);
    QSeries term = QSeries::from_qrat(QRat::q_power(static_cast<long>(j - 1)), m);
    for (std::size_t i = 0; i < k; ++i) term *= qj;
    acc += term;
  }
  return acc;
}

int fbar_type(Tree t) {
  int prod = 1;
  for (Tree c : t.children()) prod *= fbar_type(c);
  return 1 - prod;
}

TreeSeries<XPoly> pawn_q1_limit(const TreeSeries<XPoly>& pawn) {
  return pawn.map<XPoly>([](const XPoly& p) { return p.map_coefficients([](const QRat& c) { return QRat(c.eval(1)); }); });
}

}  // namespace pawn

#pragma once

// The tree series ♟ ("pawn") with coefficients in Q(q)[x], its
// specializations, and the companion series E, F^(n), G^(n), Omega_q and
// the variant Omega-bar_q.
//
// Every series here is computed through a per-tree recursion obtained by
// reading off the coefficient of a tree T = B+(T_1..T_k) with n = #T in
// the defining functional equation. Leaf-pruning sums run over nonempty
// leaf subsets S of T:
//
//   pawn:      (q^n - 1) P_T = sum_S (-1)^|S| P_{T\S}
//                            + q^n (1 + (q-1) x) prod_i P_{T_i} - [T = ●]
//   omega:     (q^n - 1) W_T = [k = 1] W_{T_1} - sum_S q^(n-|S|) W_{T\S}
//                            + (q - 1) [T = ●]
//   omega-bar: (q^n - 1) V_T = sum_S (-1)^|S| V_{T\S}
//                            + [k = 1] q^(n-1) V_{T_1} + (q - 1) [T = ●]

#include <cstddef>
#include <functional>
#include <memory>

#include "pawn/memo_series.hpp"
#include "pawn/qseries.hpp"
#include "pawn/tree_series.hpp"
#include "pawn/xpoly.hpp"

namespace pawn {

/// Pawn recursion in a ring R where x has already been fixed:
/// `one_plus_qm1_x` is 1 + (q-1)x in R and `lift` embeds Q(q) into R.
template <class R>
class PawnRecursion {
 public:
  PawnRecursion(R one_plus_qm1_x, std::function<R(const QRat&)> lift)
      : factor_(std::move(one_plus_qm1_x)),
        lift_(std::move(lift)),
        memo_([this](Tree t, const typename MemoSeries<R>::Lookup& get) { return rule(t, get); }) {}

  const R& coefficient(Tree t) { return memo_.coefficient(t); }
  TreeSeries<R> series(std::size_t order, unsigned workers = 1) { return memo_.series(order, workers); }

 private:
  R rule(Tree t, const typename MemoSeries<R>::Lookup& get) const {
    const auto n = static_cast<long>(t.size());
    R acc{};
    for (const auto& e : prune_leaf_subsets(t)) {
      if (e.removed == 0) continue;
      const long sign = (e.removed % 2 == 0) ? 1 : -1;
      acc = acc + R(sign * static_cast<long>(e.count)) * get(e.rest);
    }
    R prod = lift_(QRat::q_power(n)) * factor_;
    for (Tree c : t.children()) prod = prod * get(c);
    acc = acc + prod;
    if (t.is_vertex()) acc = acc - R(1);
    return acc * lift_(QRat(1) / QRat(QPoly::q_power_minus_one(static_cast<std::size_t>(n))));
  }

  R factor_;
  std::function<R(const QRat&)> lift_;
  MemoSeries<R> memo_;
};

/// Coefficient ♟_T (process-wide cache).
const XPoly& pawn_coefficient(Tree t);
TreeSeries<XPoly> solve_pawn(std::size_t order, unsigned workers = 1);
/// ♟ re-solved with x fixed to `x` before the recursion.
TreeSeries<QRat> solve_pawn_at(const QRat& x, std::size_t order);
/// ♟ re-solved in truncated q-series with x = `x` (a series to O(q^(m+1))).
TreeSeries<QSeries> solve_pawn_in_series(const QSeries& x, std::size_t order, std::size_t m);

/// E = sum_T T/aut(T).
TreeSeries<QRat> series_E(std::size_t order);

enum class ColoringMode { weak, strict };

/// Generating polynomial of decreasing (weak) or strictly decreasing
/// colorings by {0..n}; zero for n < 0.
const QPoly& coloring_poly(Tree t, long n, ColoringMode mode);
TreeSeries<QRat> coloring_series(std::size_t order, long n, ColoringMode mode);

/// x -> [n]_q in every coefficient.
TreeSeries<QRat> eval_pawn_at_qint(const TreeSeries<XPoly>& pawn, long n);

/// (1 + q x) prod_{i=2}^n ([i]_q + q^i x)/[i]_q.
XPoly pawn_linear(std::size_t n);
/// ♟ on Crl_n from the exponential generating function recursion.
const XPoly& pawn_corolla(std::size_t n);

const QRat& omega_coefficient(Tree t);
TreeSeries<QRat> solve_omega(std::size_t order, unsigned workers = 1);
const QRat& omega_bar_coefficient(Tree t);
TreeSeries<QRat> solve_omega_bar(std::size_t order, unsigned workers = 1);
/// Omega-bar through Sigma_{-1/q} applied to Omega with q -> 1/q.
TreeSeries<QRat> omega_bar_via_reflection(const TreeSeries<QRat>& omega);

/// Divides every coefficient by 1 + q x and evaluates at x = -1/q.
TreeSeries<QRat> limit_minus_one_over_q(const TreeSeries<XPoly>& pawn);
/// Coefficient of x^#T in ♟_T.
TreeSeries<QRat> pawn_x_infinity(const TreeSeries<XPoly>& pawn);

/// ♟_{Crl_k} at x = 1/(1-q) as a power series to O(q^(m+1)).
QSeries pawn_one_minus_q_inverse(std::size_t k, std::size_t m);
/// sum_{j>=1} q^(j-1) [j]_q^k to O(q^(m+1)).
QSeries corolla_coloring_sum(std::size_t k, std::size_t m);

/// F^(1) at q = -1: 0 or 1.
int fbar_type(Tree t);

/// Every coefficient at q = 1 (reduce, then substitute). Throws PoleError
/// if a reduced denominator vanishes at q = 1.
TreeSeries<XPoly> pawn_q1_limit(const TreeSeries<XPoly>& pawn);

}  // namespace pawn

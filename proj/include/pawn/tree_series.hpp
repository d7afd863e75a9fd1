#pragma once

// Graded tree-indexed series truncated at a fixed order.
//
// The stored value for a tree T is A_T in A = sum_T A_T T/aut(T); an
// absent key means 0. Binary operations require equal truncation orders.

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "pawn/parallel.hpp"
#include "pawn/qrat.hpp"
#include "pawn/qseries.hpp"
#include "pawn/tree.hpp"
#include "pawn/xpoly.hpp"

namespace pawn {

inline bool ring_is_zero(const Rational& a) { return a == 0; }
inline bool ring_is_zero(const QRat& a) { return a.is_zero(); }
inline bool ring_is_zero(const XPoly& a) { return a.is_zero(); }
inline bool ring_is_zero(const QSeries& a) { return a.is_zero(); }

template <class R>
struct RingName;
template <>
struct RingName<Rational> {
  static constexpr const char* value = "Q";
};
template <>
struct RingName<QRat> {
  static constexpr const char* value = "QRat";
};
template <>
struct RingName<XPoly> {
  static constexpr const char* value = "XPoly";
};
template <>
struct RingName<QSeries> {
  static constexpr const char* value = "QSeries";
};

template <class R>
R ring_pow(const R& a, std::size_t e) {
  R r(1);
  for (std::size_t i = 0; i < e; ++i) r = r * a;
  return r;
}

template <class R>
class TreeSeries {
 public:
  TreeSeries() = default;
  explicit TreeSeries(std::size_t order) : order_(order) {}

  std::size_t order() const { return order_; }

  const R& coeff(Tree t) const {
    static const R zero{};
    auto it = coeffs_.find(t.id());
    return it == coeffs_.end() ? zero : it->second;
  }

  /// Stores value at t; zero erases. Throws std::out_of_range past the order.
  void set(Tree t, R value) {
    if (t.size() > order_)
      throw std::out_of_range("tree of size " + std::to_string(t.size()) + " beyond order " + std::to_string(order_));
    if (ring_is_zero(value))
      coeffs_.erase(t.id());
    else
      coeffs_.insert_or_assign(t.id(), std::move(value));
  }

  void add(Tree t, const R& value) {
    if (ring_is_zero(value)) return;
    set(t, coeff(t) + value);
  }

  std::size_t nonzero_count() const { return coeffs_.size(); }

  /// Nonzero entries sorted by (size, encoding).
  std::vector<std::pair<Tree, R>> entries() const {
    std::vector<std::pair<Tree, R>> out;
    out.reserve(coeffs_.size());
    for (const auto& [id, v] : coeffs_) out.emplace_back(Tree::from_id(id), v);
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
  }

  /// Keeps only trees of size <= new_order.
  TreeSeries truncated(std::size_t new_order) const {
    TreeSeries out(new_order);
    for (const auto& [id, v] : coeffs_)
      if (Tree::from_id(id).size() <= new_order) out.coeffs_.emplace(id, v);
    return out;
  }

  /// Applies g to every coefficient (zeros stay absent).
  template <class S, class G>
  TreeSeries<S> map(G&& g) const {
    TreeSeries<S> out(order_);
    for (const auto& [id, v] : coeffs_) out.set(Tree::from_id(id), g(v));
    return out;
  }

  /// Coefficient-wise map that also sees the tree.
  template <class S, class G>
  TreeSeries<S> map_with_tree(G&& g) const {
    TreeSeries<S> out(order_);
    for (const auto& [id, v] : coeffs_) out.set(Tree::from_id(id), g(Tree::from_id(id), v));
    return out;
  }

  TreeSeries& operator+=(const TreeSeries& o) {
    require_same_order(o);
    for (const auto& [id, v] : o.coeffs_) add(Tree::from_id(id), v);
    return *this;
  }
  TreeSeries& operator-=(const TreeSeries& o) {
    require_same_order(o);
    for (const auto& [id, v] : o.coeffs_) add(Tree::from_id(id), -v);
    return *this;
  }
  friend TreeSeries operator+(TreeSeries a, const TreeSeries& b) { return a += b; }
  friend TreeSeries operator-(TreeSeries a, const TreeSeries& b) { return a -= b; }
  TreeSeries operator-() const {
    TreeSeries out(order_);
    for (const auto& [id, v] : coeffs_) out.coeffs_.emplace(id, -v);
    return out;
  }
  friend TreeSeries operator*(const R& c, const TreeSeries& a) {
    TreeSeries out(a.order_);
    for (const auto& [id, v] : a.coeffs_) out.set(Tree::from_id(id), c * v);
    return out;
  }

  friend bool operator==(const TreeSeries& a, const TreeSeries& b) {
    return a.order_ == b.order_ && a.coeffs_ == b.coeffs_;
  }

  void require_same_order(const TreeSeries& o) const {
    if (o.order_ != order_)
      throw std::invalid_argument("tree series order mismatch: " + std::to_string(order_) + " vs " +
                                  std::to_string(o.order_));
  }

  /// True when the only nonzero coefficient sits on the single vertex.
  bool is_vertex_multiple() const {
    return coeffs_.empty() || (coeffs_.size() == 1 && coeffs_.begin()->first == Tree::vertex().id());
  }

 private:
  std::size_t order_ = 0;
  std::unordered_map<TreeId, R> coeffs_;
};

/// c times the single vertex.
template <class R>
TreeSeries<R> unit_vertex(const R& c, std::size_t order) {
  TreeSeries<R> s(order);
  if (order >= 1) s.set(Tree::vertex(), c);
  return s;
}

/// Degree-n part multiplied by alpha^(n-1).
template <class R>
TreeSeries<R> suspension(const TreeSeries<R>& a, const R& alpha) {
  std::vector<R> powers{R(1)};
  for (std::size_t n = 1; n < a.order(); ++n) powers.push_back(powers.back() * alpha);
  return a.template map_with_tree<R>([&](Tree t, const R& v) { return powers[t.size() - 1] * v; });
}

/// Sum over root-containing subtrees T0 of A_{T0} * prod B_comp, using the
/// general decomposition table for every tree.
template <class R>
R diamond_crls_coefficient(const TreeSeries<R>& a, const TreeSeries<R>& b, Tree t) {
  R acc{};
  for (const auto& d : root_subtree_decompositions(t)) {
    const R& head = a.coeff(d.kept);
    if (ring_is_zero(head)) continue;
    R term = head;
    for (Tree c : d.components) {
      const R& bc = b.coeff(c);
      if (ring_is_zero(bc)) {
        term = R{};
        break;
      }
      term = term * bc;
    }
    if (ring_is_zero(term)) continue;
    if (d.multiplicity != 1) term = R(static_cast<long>(d.multiplicity)) * term;
    acc = acc + term;
  }
  return acc;
}

template <class R>
TreeSeries<R> diamond_crls_generic(const TreeSeries<R>& a, const TreeSeries<R>& b, unsigned workers = 1) {
  a.require_same_order(b);
  TreeSeries<R> out(a.order());
  const std::vector<Tree> trees = trees_up_to(a.order());
  std::vector<R> values(trees.size());
  parallel_for(trees.size(), workers, [&](std::size_t i) { values[i] = diamond_crls_coefficient(a, b, trees[i]); });
  for (std::size_t i = 0; i < trees.size(); ++i) out.set(trees[i], std::move(values[i]));
  return out;
}

/// Crls ⋄ (A, B): A inserted at the root, B at the leaves of every corolla.
/// Fast paths: A = a·● reduces to a product over children, B = c·● to a
/// sum over leaf prunings weighted by c^|S|.
template <class R>
TreeSeries<R> diamond_crls(const TreeSeries<R>& a, const TreeSeries<R>& b, unsigned workers = 1) {
  a.require_same_order(b);
  const std::vector<Tree> trees = trees_up_to(a.order());
  std::vector<R> values(trees.size());
  if (a.is_vertex_multiple()) {
    const R& head = a.coeff(Tree::vertex());
    parallel_for(trees.size(), workers, [&](std::size_t i) {
      R term = head;
      for (Tree c : trees[i].children()) term = term * b.coeff(c);
      values[i] = std::move(term);
    });
  } else if (b.is_vertex_multiple()) {
    const R& leaf = b.coeff(Tree::vertex());
    std::vector<R> powers{R(1)};
    for (std::size_t n = 1; n < a.order(); ++n) powers.push_back(powers.back() * leaf);
    parallel_for(trees.size(), workers, [&](std::size_t i) {
      R acc{};
      for (const auto& e : prune_leaf_subsets(trees[i])) {
        const R& v = a.coeff(e.rest);
        if (ring_is_zero(v)) continue;
        acc = acc + R(static_cast<long>(e.count)) * powers[e.removed] * v;
      }
      values[i] = std::move(acc);
    });
  } else {
    return diamond_crls_generic(a, b, workers);
  }
  TreeSeries<R> out(a.order());
  for (std::size_t i = 0; i < trees.size(); ++i) out.set(trees[i], std::move(values[i]));
  return out;
}

/// ● ↶ A: coefficient A_{T'} on B+(T'), zero on trees whose root does not
/// have exactly one child.
template <class R>
TreeSeries<R> graft_root_single(const TreeSeries<R>& a) {
  TreeSeries<R> out(a.order());
  for (const auto& [t, v] : a.entries())
    if (t.size() + 1 <= a.order()) out.set(Tree::graft({t}), v);
  return out;
}

/// x # y = x + Crls ⋄ (y, x).
template <class R>
TreeSeries<R> sharp(const TreeSeries<R>& x, const TreeSeries<R>& y, unsigned workers = 1) {
  return x + diamond_crls(y, x, workers);
}

}  // namespace pawn

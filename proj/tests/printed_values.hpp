#pragma once

// Published values, transcribed as exact data.

#include <utility>
#include <vector>

#include "pawn/cyclotomic.hpp"
#include "pawn/qrat.hpp"
#include "pawn/tree.hpp"
#include "pawn/xpoly.hpp"

namespace pawn::printed {

inline QRat poly(std::initializer_list<long> c) { return QRat(QPoly(c)); }
inline QRat phi(unsigned d) { return QRat(cyclotomic(d)); }
inline XPoly lin(const QRat& a, const QRat& b) { return XPoly::linear(a, b); }
inline XPoly over(const XPoly& f, const QRat& d) { return f * (QRat(1) / d); }

inline Tree five_vertex_tree() { return Tree::graft({Tree::vertex(), Tree::corolla(2)}); }

/// First four terms of ♟.
inline std::vector<std::pair<Tree, XPoly>> first_pawn_terms() {
  const XPoly a = lin(poly({1}), poly({0, 1}));
  const XPoly b = lin(poly({1, 1}), poly({0, 0, 1}));
  const XPoly lnr3 = lin(poly({1, 1, 1}), poly({0, 0, 0, 1}));
  const XPoly crl2 = lin(poly({1, 1, 1}), poly({0, 0, 1, 1}));
  return {
      {Tree::vertex(), a},
      {Tree::linear(2), over(a * b, phi(2))},
      {Tree::linear(3), over(a * b * lnr3, phi(2) * phi(3))},
      {Tree::corolla(2), over(a * b * crl2, phi(2) * phi(3))},
  };
}

/// First eight terms of Omega-bar.
inline std::vector<std::pair<Tree, QRat>> first_omega_bar_terms() {
  const Tree dot = Tree::vertex();
  return {
      {dot, QRat(1)},
      {Tree::linear(2), QRat(1) / phi(2)},
      {Tree::linear(3), QRat(1) / phi(3)},
      {Tree::corolla(2), QRat(1) / (phi(2) * phi(3))},
      {Tree::linear(4), QRat(1) / (phi(2) * phi(4))},
      {Tree::graft({Tree::corolla(2)}), QRat(1) / (phi(3) * phi(4))},
      {Tree::graft({Tree::linear(2), dot}), QRat(1) / (phi(2) * phi(3) * phi(4))},
      {Tree::corolla(3), poly({1, -1}) / (phi(2) * phi(3) * phi(4))},
  };
}

inline XPoly five_vertex_pawn_numerator() {
  const XPoly last({poly({1, 2, 3, 4, 4, 3, 2, 1}), poly({0, 0, 1, 3, 6, 6, 5, 4, 2}),
                    poly({0, 0, 0, 0, 0, 1, 2, 2, 2, 1})});
  return lin(poly({1}), poly({0, 1})) * lin(poly({1, 1}), poly({0, 0, 1})) *
         lin(poly({1, 1, 1}), poly({0, 0, 0, 1})) * last;
}
inline QPoly five_vertex_pawn_denominator() {
  return QPoly{1, 1} * QPoly{1, 1, 1} * QPoly{1, 1, 1, 1} * QPoly{1, 1, 1, 1, 1};
}
inline QPoly five_vertex_F1() { return QPoly{1, 1, 2, 3, 3, 1}; }
inline QPoly five_vertex_G3() { return QPoly{0, 0, 0, 1, 2, 2, 4, 4, 3, 1}; }
inline QRat five_vertex_omega_bar() { return poly({1, 1, 0, -1}) / (phi(2) * phi(3) * phi(4) * phi(5)); }

/// ♟ on the corolla with three leaves.
inline XPoly corolla3_pawn() {
  const XPoly last({phi(3) * phi(4), poly({0, 0, 2, 3, 2, 2}), poly({0, 0, 0, 0, 1}) * phi(3)});
  return over(lin(poly({1}), poly({0, 1})) * lin(poly({1, 1}), poly({0, 0, 1})) * last, phi(2) * phi(3) * phi(4));
}

/// Bernoulli numbers B_0..B_12 with B_1 = -1/2.
inline std::vector<Rational> bernoulli_numbers() {
  return {1, Rational(-1, 2), Rational(1, 6), 0, Rational(-1, 30), 0, Rational(1, 42), 0, Rational(-1, 30), 0,
          Rational(5, 66), 0, Rational(-691, 2730)};
}

/// Omega at q = 1 on B+(Lnr_2, ..., Lnr_2) with k = 1..4 copies.
inline std::vector<Rational> double_corolla_values() {
  return {Rational(1, 3), Rational(1, 30), Rational(-1, 105), Rational(1, 210)};
}

}  // namespace pawn::printed

#include <random>

#include "doctest.h"
#include "pawn/series.hpp"
#include "pawn/tree_series.hpp"
#include "tree_oracles.hpp"

using namespace pawn;
using namespace pawn::test;

namespace {

using IntSeries = TreeSeries<Rational>;

const Tree dot = Tree::vertex();

IntSeries random_series(std::mt19937& rng, std::size_t order, int lo = -3, int hi = 3) {
  std::uniform_int_distribution<int> coef(lo, hi);
  IntSeries s(order);
  for (Tree t : trees_up_to(order)) s.set(t, coef(rng));
  return s;
}

IntSeries constant_series(std::size_t order, long c) {
  IntSeries s(order);
  for (Tree t : trees_up_to(order)) s.set(t, c);
  return s;
}

IntSeries vertex(long c, std::size_t order) { return unit_vertex(Rational(c), order); }

// Root-subtree decompositions counted directly on a labeled representative: every
// root-containing vertex subset, weighted by A on the kept part and B on
// the subtrees hanging off it.
Rational oracle_diamond(const IntSeries& a, const IntSeries& b, Tree t) {
  const auto lt = labeled(t);
  const int n = static_cast<int>(lt.parent.size());
  Rational total = 0;
  for (unsigned mask = 1; mask < (1u << n); mask += 2) {
    std::vector<bool> keep(n);
    for (int v = 0; v < n; ++v) keep[v] = mask >> v & 1;
    bool closed = true;
    for (int v = 1; v < n; ++v) closed = closed && (!keep[v] || keep[lt.parent[v]]);
    if (!closed) continue;
    Rational term = a.coeff(Tree::parse(oracle_encoding(lt.parent, keep, 0)));
    for (int v = 1; v < n; ++v)
      if (!keep[v] && keep[lt.parent[v]]) term *= b.coeff(Tree::parse(oracle_encoding(lt.parent, v)));
    total += term;
  }
  return total;
}

}  // namespace

TEST_CASE("unit vertex and suspension") {
  const IntSeries one = vertex(1, 3);
  CHECK(one.nonzero_count() == 1);
  CHECK(one.coeff(dot) == 1);
  CHECK(vertex(-1, 3).coeff(dot) == -1);
  const QRat q = QRat::q();
  const auto main_scalar = unit_vertex(XPoly::linear(q, q * (q - QRat(1))), 2);
  CHECK(main_scalar.coeff(dot) == XPoly::linear(q, q * q - q));

  std::mt19937 rng(5);
  const IntSeries a = random_series(rng, 6);
  CHECK(suspension(a, Rational(1)) == a);
  CHECK(suspension(suspension(a, Rational(2)), Rational(-3)) == suspension(a, Rational(-6)));

  TreeSeries<QRat> aq = a.map<QRat>([](const Rational& r) { return QRat(r); });
  const QRat alpha = q + QRat(1), beta = q * q - QRat(2);
  CHECK(suspension(suspension(aq, alpha), beta) == suspension(aq, alpha * beta));
  const auto scaled = q * suspension(aq, q);
  for (const auto& [t, v] : aq.entries()) CHECK(scaled.coeff(t) == QRat::q_power(static_cast<long>(t.size())) * v);
}

TEST_CASE("series bookkeeping") {
  IntSeries s(3);
  CHECK_THROWS_AS(s.set(Tree::linear(4), 1), std::out_of_range);
  s.set(dot, 0);
  CHECK(s.nonzero_count() == 0);
  CHECK_THROWS_AS(s + IntSeries(4), std::invalid_argument);
  CHECK_THROWS_AS(diamond_crls(s, IntSeries(4)), std::invalid_argument);
  s.set(Tree::corolla(2), 5);
  s.set(dot, 1);
  const auto e = s.entries();
  REQUIRE(e.size() == 2);
  CHECK(e[0].first == dot);
  CHECK(s.truncated(2).nonzero_count() == 1);
}

TEST_CASE("diamond product examples") {
  const std::size_t order = 7;
  const IntSeries crls = diamond_crls(vertex(1, order), vertex(1, order));
  for (Tree t : trees_up_to(order)) {
    const bool is_corolla = t.height() <= 2;
    CHECK(crls.coeff(t) == (is_corolla ? 1 : 0));
  }
  const IntSeries e = constant_series(order, 1);
  CHECK(diamond_crls(vertex(1, order), e) == e);
  CHECK(diamond_crls(e, vertex(-1, order)) == vertex(1, order));
}

TEST_CASE("fast paths agree with the general decomposition sum") {
  std::mt19937 rng(17);
  const std::size_t order = 7;
  for (int trial = 0; trial < 3; ++trial) {
    const IntSeries a = random_series(rng, order), b = random_series(rng, order);
    const long c = trial - 1;
    CHECK(diamond_crls(vertex(c + 2, order), b) == diamond_crls_generic(vertex(c + 2, order), b));
    CHECK(diamond_crls(a, vertex(c, order)) == diamond_crls_generic(a, vertex(c, order)));
  }
}

TEST_CASE("diamond product counts root-subtree decompositions") {
  std::mt19937 rng(23);
  const std::size_t order = 6;
  for (int trial = 0; trial < 2; ++trial) {
    const IntSeries a = random_series(rng, order, 0, 4), b = random_series(rng, order, 0, 4);
    const IntSeries c = diamond_crls(a, b);
    for (Tree t : trees_up_to(order)) CHECK(c.coeff(t) == oracle_diamond(a, b, t));
  }
}

TEST_CASE("diamond product is linear in its first argument") {
  std::mt19937 rng(29);
  const std::size_t order = 6;
  const IntSeries a1 = random_series(rng, order), a2 = random_series(rng, order), b = random_series(rng, order);
  CHECK(diamond_crls(a1 + a2, b) == diamond_crls(a1, b) + diamond_crls(a2, b));
  CHECK(diamond_crls(Rational(3) * a1, b) == Rational(3) * diamond_crls(a1, b));
}

TEST_CASE("nesting of diamond products") {
  std::mt19937 rng(31);
  const std::size_t order = 5;
  for (int trial = 0; trial < 3; ++trial) {
    const IntSeries a = random_series(rng, order), b = random_series(rng, order), c = random_series(rng, order);
    CHECK(diamond_crls(diamond_crls(a, b), c) == diamond_crls(a, sharp(c, b)));
    CHECK(sharp(sharp(a, b), c) == sharp(a, sharp(b, c)));
  }
  // The nesting with Crls ⋄ (B, C) in the second slot differs on Lnr_2 by
  // A_● C_●.
  IntSeries a(2), b(2), c(2);
  a.set(dot, 2);
  b.set(dot, 3);
  c.set(dot, 5);
  const auto lhs = diamond_crls(diamond_crls(a, b), c), rhs = diamond_crls(a, diamond_crls(b, c));
  CHECK(lhs.coeff(Tree::linear(2)) - rhs.coeff(Tree::linear(2)) == 10);
}

TEST_CASE("suspension acts on the diamond product") {
  std::mt19937 rng(37);
  const std::size_t order = 6;
  const IntSeries b = random_series(rng, order), c = random_series(rng, order);
  for (long alpha : {2L, -1L, 3L}) {
    const Rational al(alpha);
    CHECK(suspension(diamond_crls(b, c), al) == diamond_crls(suspension(b, al), al * suspension(c, al)));
  }
  const QRat q = QRat::q();
  auto bq = b.map<QRat>([](const Rational& r) { return QRat(r); });
  auto cq = c.map<QRat>([](const Rational& r) { return QRat(r); });
  CHECK(suspension(diamond_crls(bq, cq), q) == diamond_crls(suspension(bq, q), q * suspension(cq, q)));
}

TEST_CASE("grafting onto a single vertex") {
  const std::size_t order = 4;
  const auto g = graft_root_single(vertex(1, order));
  CHECK(g.coeff(Tree::linear(2)) == 1);
  CHECK(g.nonzero_count() == 1);
  IntSeries a(order);
  a.set(Tree::linear(2), 7);
  a.set(Tree::corolla(2), 3);
  const auto h = graft_root_single(a);
  CHECK(h.coeff(Tree::linear(3)) == 7);
  CHECK(h.coeff(Tree::graft({Tree::corolla(2)})) == 3);
  CHECK(h.coeff(Tree::corolla(2)) == 0);
  CHECK(h.coeff(Tree::corolla(3)) == 0);
  IntSeries full = constant_series(order, 1);
  CHECK(graft_root_single(full).nonzero_count() == trees_up_to(order - 1).size());
}

TEST_CASE("sharp product") {
  std::mt19937 rng(41);
  const IntSeries a = random_series(rng, 5);
  CHECK(sharp(a, IntSeries(5)) == a);
}

TEST_CASE("recovery from the series E") {
  std::mt19937 rng(43);
  const std::size_t order = 6;
  const IntSeries e = constant_series(order, 1);
  for (int trial = 0; trial < 3; ++trial) {
    const IntSeries a = random_series(rng, order);
    CHECK(diamond_crls(diamond_crls(a, e), vertex(-1, order)) == a);
  }
}

TEST_CASE("divisibility of diamond products with E") {
  const std::size_t order = 7;
  const IntSeries e = constant_series(order, 1);
  for (long k = 1; k <= 5; ++k) {
    const IntSeries d = diamond_crls(e, vertex(k, order));
    const IntSeries s = sharp(vertex(k, order), e);
    for (Tree t : trees_up_to(order)) {
      CHECK(s.coeff(t).get_den() == 1);
      CHECK(mpz_divisible_ui_p(s.coeff(t).get_num().get_mpz_t(), k + 1) != 0);
      if (t.size() >= 2) CHECK(mpz_divisible_ui_p(d.coeff(t).get_num().get_mpz_t(), k + 1) != 0);
    }
    // On the single vertex the coefficient is 1.
    CHECK(d.coeff(dot) == 1);
  }
}

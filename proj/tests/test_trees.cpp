#include <algorithm>
#include <bit>
#include <functional>
#include <map>
#include <set>
#include <string>

#include "doctest.h"
#include "pawn/tree.hpp"
#include "tree_oracles.hpp"

using namespace pawn;
using namespace pawn::test;

namespace {

const Tree dot = Tree::vertex();
const Tree t5 = Tree::graft({dot, Tree::corolla(2)});

// Every labeled rooted tree on n vertices as a parent array with
// parent[v] < v, reduced modulo isomorphism.
std::set<std::string> oracle_classes(int n) {
  std::set<std::string> out;
  std::vector<int> parent(n, -1);
  std::function<void(int)> rec = [&](int v) {
    if (v == n) {
      out.insert(oracle_encoding(parent, 0));
      return;
    }
    for (int p = 0; p < v; ++p) {
      parent[v] = p;
      rec(v + 1);
    }
  };
  rec(1);
  return out;
}

// Automorphisms of the labeled representative, by permutation search.
long oracle_aut(Tree t) {
  const auto lt = labeled(t);
  const int n = static_cast<int>(lt.parent.size());
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  long count = 0;
  do {
    bool ok = true;
    for (int v = 1; ok && v < n; ++v) ok = perm[lt.parent[v]] == lt.parent[perm[v]];
    count += ok;
  } while (std::next_permutation(perm.begin() + 1, perm.end()));
  return count;
}

Integer int_pow(const Integer& a, unsigned long e) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), a.get_mpz_t(), e);
  return r;
}

using PruneKey = std::pair<unsigned, std::string>;

// Raw subset enumeration over the leaves of the representative.
std::map<PruneKey, long> oracle_prune(Tree t) {
  const auto lt = labeled(t);
  const int n = static_cast<int>(lt.parent.size());
  std::vector<int> leaves;
  for (int v = 0; v < n; ++v)
    if (lt.children[v].empty()) leaves.push_back(v);
  std::map<PruneKey, long> out;
  for (unsigned mask = 0; mask < (1u << leaves.size()); ++mask) {
    std::vector<bool> keep(n, true);
    unsigned removed = 0;
    for (std::size_t i = 0; i < leaves.size(); ++i)
      if (mask >> i & 1) keep[leaves[i]] = false, ++removed;
    if (!keep[0]) continue;
    ++out[{removed, oracle_encoding(lt.parent, keep, 0)}];
  }
  return out;
}

std::map<PruneKey, long> as_map(const std::vector<PruneEntry>& entries) {
  std::map<PruneKey, long> out;
  for (const auto& e : entries) out[{e.removed, e.rest.encoding()}] += e.count;
  return out;
}

using DecompKey = std::pair<std::string, std::vector<std::string>>;

// Raw enumeration of root-containing vertex subsets.
std::map<DecompKey, long> oracle_decompositions(Tree t) {
  const auto lt = labeled(t);
  const int n = static_cast<int>(lt.parent.size());
  std::map<DecompKey, long> out;
  for (unsigned mask = 1; mask < (1u << n); mask += 2) {
    std::vector<bool> keep(n);
    for (int v = 0; v < n; ++v) keep[v] = mask >> v & 1;
    bool closed = true;
    for (int v = 1; v < n; ++v) closed = closed && (!keep[v] || keep[lt.parent[v]]);
    if (!closed) continue;
    std::vector<std::string> comps;
    for (int v = 1; v < n; ++v)
      if (!keep[v] && keep[lt.parent[v]]) comps.push_back(oracle_encoding(lt.parent, v));
    std::sort(comps.begin(), comps.end());
    ++out[{oracle_encoding(lt.parent, keep, 0), comps}];
  }
  return out;
}

std::map<DecompKey, long> as_map(const std::vector<Decomposition>& ds) {
  std::map<DecompKey, long> out;
  for (const auto& d : ds) {
    std::vector<std::string> comps;
    for (Tree c : d.components) comps.push_back(c.encoding());
    std::sort(comps.begin(), comps.end());
    out[{d.kept.encoding(), comps}] += d.multiplicity;
  }
  return out;
}

}  // namespace

TEST_CASE("canonical encodings") {
  CHECK(dot.encoding() == "()");
  CHECK(Tree::corolla(2).encoding() == "(()())");
  CHECK(Tree::graft({Tree::corolla(2), dot}) == Tree::graft({dot, Tree::corolla(2)}));
  CHECK(Tree::parse("((()())())") == t5);
  CHECK(t5.encoding() == "(()(()()))");
  CHECK(Tree::parse(t5.encoding()).encoding() == t5.encoding());
  CHECK(Tree::linear(3).encoding() == "((()))");
  for (const char* bad : {"", "(", ")", "()()", "(()", "(a)", "())("}) CHECK_THROWS_AS(Tree::parse(bad), std::invalid_argument);
}

TEST_CASE("size, height and children") {
  CHECK(t5.size() == 5);
  CHECK(t5.height() == 3);
  CHECK(dot.height() == 1);
  CHECK(t5.children().size() == 2);
  CHECK(Tree::linear(4).height() == 4);
  CHECK(Tree::corolla(3).height() == 2);
}

TEST_CASE("enumeration counts") {
  const std::vector<std::size_t> counts{1, 1, 2, 4, 9, 20, 48, 115, 286, 719};
  for (std::size_t n = 1; n <= counts.size(); ++n) {
    const auto& trees = enumerate_trees(n);
    CHECK(trees.size() == counts[n - 1]);
    CHECK(std::is_sorted(trees.begin(), trees.end()));
    std::set<std::string> encs;
    for (Tree t : trees) {
      CHECK(t.size() == n);
      encs.insert(t.encoding());
      CHECK(Tree::parse(t.encoding()) == t);
    }
    CHECK(encs.size() == trees.size());
  }
  CHECK(enumerate_trees(3) == std::vector<Tree>{Tree::linear(3), Tree::corolla(2)});
  CHECK(trees_up_to(7).size() == 85);
}

TEST_CASE("enumeration agrees with labeled brute force") {
  for (int n = 1; n <= 7; ++n) {
    std::set<std::string> lib;
    for (Tree t : enumerate_trees(n)) lib.insert(t.encoding());
    CHECK(lib == oracle_classes(n));
  }
}

TEST_CASE("automorphism orders") {
  CHECK(aut_order(Tree::corolla(4)) == 24);
  CHECK(aut_order(Tree::linear(5)) == 1);
  CHECK(aut_order(Tree::graft({dot, dot, Tree::corolla(2)})) == 4);
  CHECK(aut_order(t5) == 2);
  for (Tree t : trees_up_to(7)) CHECK(aut_order(t) == oracle_aut(t));
  for (Tree t : trees_up_to(4))
    for (std::size_t k = 1; k <= 4; ++k)
      CHECK(aut_order(Tree::graft(std::vector<Tree>(k, t))) == factorial(k) * int_pow(aut_order(t), k));
}

TEST_CASE("tree statistics") {
  auto s = tree_stats(t5);
  CHECK(s.height == 3);
  CHECK(s.leaf_count == 3);
  CHECK(s.height_histogram == std::map<int, int>{{1, 1}, {2, 2}, {3, 2}});
  CHECK(s.subtree_sizes == std::vector<std::size_t>{1, 1, 1, 3, 5});
  s = tree_stats(Tree::linear(4));
  CHECK(s.height == 4);
  CHECK(s.leaf_count == 1);
  s = tree_stats(Tree::corolla(3));
  CHECK(s.height == 2);
  CHECK(s.leaf_count == 3);
  CHECK(s.leaf_positions == std::vector<int>{1, 2, 3});
}

TEST_CASE("q-factorials") {
  const QRat q = QRat::q();
  CHECK(q_factorial(t5) == QRat::q_power(-11) * q_integer(3) * q_integer(5));
  CHECK(q_factorial(dot) == QRat::q_power(-1));
  CHECK(q_factorial(Tree::linear(2)) == QRat::q_power(-3) * q_integer(2));
  for (Tree t : trees_up_to(8)) CHECK(q_factorial(t).eval(1) == tree_factorial(t));
}

TEST_CASE("leaf pruning") {
  const Tree crl2 = Tree::corolla(2);
  CHECK(as_map(prune_leaf_subsets(crl2)) ==
        std::map<PruneKey, long>{{{0, "(()())"}, 1}, {{1, "(())"}, 2}, {{2, "()"}, 1}});
  CHECK(as_map(prune_leaf_subsets(dot)) == std::map<PruneKey, long>{{{0, "()"}, 1}});
  CHECK(as_map(prune_leaf_subsets(Tree::linear(3))) == std::map<PruneKey, long>{{{0, "((()))"}, 1}, {{1, "(())"}, 1}});
  CHECK(as_map(prune_leaf_subsets(crl2, true)) == std::map<PruneKey, long>{{{1, "(())"}, 2}, {{2, "()"}, 1}});
}

TEST_CASE("leaf pruning agrees with raw subset enumeration") {
  for (Tree t : trees_up_to(9)) CHECK(as_map(prune_leaf_subsets(t)) == oracle_prune(t));
  for (std::size_t n = 10; n <= 12; ++n) {
    CHECK(as_map(prune_leaf_subsets(Tree::corolla(n - 1))) == oracle_prune(Tree::corolla(n - 1)));
    const Tree mixed = Tree::graft({Tree::corolla(3), Tree::corolla(3), Tree::linear(n - 9)});
    CHECK(as_map(prune_leaf_subsets(mixed)) == oracle_prune(mixed));
  }
}

TEST_CASE("root subtree decompositions") {
  using M = std::map<DecompKey, long>;
  CHECK(as_map(root_subtree_decompositions(dot)) == M{{{"()", {}}, 1}});
  CHECK(as_map(root_subtree_decompositions(Tree::linear(2))) == M{{{"(())", {}}, 1}, {{"()", {"()"}}, 1}});
  CHECK(as_map(root_subtree_decompositions(Tree::corolla(2))) ==
        M{{{"(()())", {}}, 1}, {{"(())", {"()"}}, 2}, {{"()", {"()", "()"}}, 1}});
  for (Tree t : trees_up_to(8)) CHECK(as_map(root_subtree_decompositions(t)) == oracle_decompositions(t));
}

TEST_CASE("decompositions with single-vertex components match pruning") {
  for (Tree t : trees_up_to(8)) {
    std::map<PruneKey, long> from_decomp;
    for (const auto& d : root_subtree_decompositions(t)) {
      const bool all_dots = std::all_of(d.components.begin(), d.components.end(), [](Tree c) { return c.is_vertex(); });
      if (all_dots) from_decomp[{static_cast<unsigned>(d.components.size()), d.kept.encoding()}] += d.multiplicity;
    }
    CHECK(from_decomp == as_map(prune_leaf_subsets(t)));
  }
}

TEST_CASE("partition trees") {
  CHECK(partition_tree(std::vector<int>{}) == dot);
  CHECK(partition_tree(std::vector<int>{1}) == Tree::linear(2));
  const auto t = partition_tree(std::vector<int>{2, 1});
  CHECK(t == Tree::graft({Tree::linear(2), dot}));
  CHECK(t.size() == 4);
  CHECK_THROWS_AS(partition_tree(std::vector<int>{0}), std::invalid_argument);
}

TEST_CASE("minimum vertex covers") {
  auto c = min_vertex_covers_root(dot);
  CHECK(c.cover_size == 0);
  CHECK(!c.some_cover_contains_root);
  c = min_vertex_covers_root(Tree::linear(2));
  CHECK(c.cover_size == 1);
  CHECK(c.some_cover_contains_root);
  CHECK(min_vertex_covers_root(t5).some_cover_contains_root);
  // Exhaustive search on the representative.
  for (Tree t : trees_up_to(9)) {
    const auto lt = labeled(t);
    const int n = static_cast<int>(lt.parent.size());
    int best = n + 1;
    bool with_root = false;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
      bool covers = true;
      for (int v = 1; covers && v < n; ++v) covers = (mask >> v & 1) || (mask >> lt.parent[v] & 1);
      if (!covers) continue;
      const int size = std::popcount(mask);
      if (size < best) best = size, with_root = false;
      if (size == best && (mask & 1)) with_root = true;
    }
    const auto info = min_vertex_covers_root(t);
    CHECK(info.cover_size == best);
    CHECK(info.some_cover_contains_root == with_root);
    CHECK(info.no_cover_contains_root == !with_root);
  }
}

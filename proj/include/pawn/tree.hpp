#pragma once

// Canonical unlabeled rooted trees.
//
// A tree is interned in a process-wide table and referred to by a dense
// id. Its canonical encoding is "(" + children encodings + ")" with the
// children sorted shortlex, so two trees are isomorphic iff their
// encodings are equal.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "pawn/qrat.hpp"
#include "pawn/rational.hpp"

namespace pawn {

using TreeId = std::uint32_t;

class Tree {
 public:
  /// The single vertex.
  Tree();

  static Tree vertex() { return Tree(); }
  /// B+(children): graft the children onto a new common root.
  static Tree graft(std::vector<Tree> children);
  /// Canonicalizes any well-formed parenthesis nesting, e.g. "((())())".
  /// Throws std::invalid_argument on malformed input.
  static Tree parse(std::string_view nesting);
  /// Crl_n: a root with n leaves.
  static Tree corolla(std::size_t n);
  /// Lnr_n: the path on n >= 1 vertices.
  static Tree linear(std::size_t n);
  static Tree from_id(TreeId id);

  TreeId id() const { return id_; }
  std::size_t size() const;
  /// Number of vertices on the longest root-to-leaf chain.
  int height() const;
  const std::string& encoding() const;
  /// Children in canonical (shortlex) order.
  std::span<const Tree> children() const;
  bool is_vertex() const;

  friend bool operator==(Tree a, Tree b) { return a.id_ == b.id_; }
  /// Canonical order: by size, then by encoding.
  friend std::strong_ordering operator<=>(Tree a, Tree b);

 private:
  explicit Tree(TreeId id) : id_(id) {}
  TreeId id_;
};

struct TreeIdHash {
  std::size_t operator()(Tree t) const noexcept { return t.id(); }
};

/// All isomorphism classes on n >= 1 vertices, in canonical order.
const std::vector<Tree>& enumerate_trees(std::size_t n);
/// All classes of size 1..n in canonical order.
std::vector<Tree> trees_up_to(std::size_t n);

Integer aut_order(Tree t);

/// Vertices of the canonical representative in preorder; vertex 0 is the
/// root and children follow canonical order.
struct LabeledTree {
  std::vector<int> parent;  // parent[0] == -1
  std::vector<int> depth;   // root has height 1
  std::vector<std::vector<int>> children;
};
LabeledTree labeled(Tree t);

struct TreeStats {
  int height = 0;
  int leaf_count = 0;
  std::vector<int> leaf_positions;       // preorder indices of the leaves
  std::map<int, int> height_histogram;   // vertex height -> count
  std::vector<std::size_t> subtree_sizes;  // sorted ascending
};
TreeStats tree_stats(Tree t);

/// q^(-sum #T_v) * prod [#T_v]_q over vertices v.
QRat q_factorial(Tree t);
/// prod #T_v.
Integer tree_factorial(Tree t);

struct PruneEntry {
  Tree rest;
  unsigned removed = 0;
  std::int64_t count = 0;
};
/// Leaf-subset removals S (T minus S nonempty) grouped by the class of
/// T minus S and |S|; identical sibling leaves are grouped, never
/// enumerated. Sorted by (removed, rest).
const std::vector<PruneEntry>& prune_leaf_subsets(Tree t);
std::vector<PruneEntry> prune_leaf_subsets(Tree t, bool proper_only);

struct Decomposition {
  Tree kept;                     // root-containing subtree T0
  std::vector<Tree> components;  // complement components, canonical order
  std::int64_t multiplicity = 0;
};
/// Root-containing vertex subsets of the canonical representative,
/// grouped by (class of T0, multiset of component classes).
const std::vector<Decomposition>& root_subtree_decompositions(Tree t);

/// B+(Lnr_{l1}, ..., Lnr_{lm}); throws on nonpositive parts.
Tree partition_tree(std::span<const int> parts);

struct VertexCoverInfo {
  int cover_size = 0;
  bool some_cover_contains_root = false;
  bool no_cover_contains_root = true;
};
VertexCoverInfo min_vertex_covers_root(Tree t);

}  // namespace pawn

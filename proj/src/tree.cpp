#include "pawn/tree.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <functional>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <unordered_map>

namespace pawn {

namespace {

bool shortlex_less(const std::string& a, const std::string& b) {
  return a.size() != b.size() ? a.size() < b.size() : a < b;
}

struct Node {
  std::vector<Tree> children;
  std::string encoding;
  std::size_t size = 1;
  int height = 1;
};

// Insert-only interning table. Nodes live in fixed chunks so readers never
// need the lock: an id is only observable after its node is published.
class TreeTable {
 public:
  static constexpr std::size_t kChunkBits = 12;
  static constexpr std::size_t kChunkSize = std::size_t{1} << kChunkBits;
  static constexpr std::size_t kMaxChunks = 1u << 16;

  TreeTable() { intern_sorted({}); }

  const Node& node(TreeId id) const {
    const Node* chunk = chunks_[id >> kChunkBits].load(std::memory_order_acquire);
    return chunk[id & (kChunkSize - 1)];
  }

  TreeId intern(std::vector<Tree> children) {
    std::sort(children.begin(), children.end(),
              [this](Tree a, Tree b) { return shortlex_less(node(a.id()).encoding, node(b.id()).encoding); });
    return intern_sorted(std::move(children));
  }

  const std::vector<Tree>& of_size(std::size_t n);

 private:
  TreeId intern_sorted(std::vector<Tree> children) {
    std::string enc = "(";
    std::size_t size = 1;
    int height = 1;
    for (Tree c : children) {
      const Node& cn = node(c.id());
      enc += cn.encoding;
      size += cn.size;
      height = std::max(height, cn.height + 1);
    }
    enc += ')';
    {
      std::shared_lock lock(mutex_);
      if (auto it = index_.find(enc); it != index_.end()) return it->second;
    }
    std::unique_lock lock(mutex_);
    if (auto it = index_.find(enc); it != index_.end()) return it->second;
    const auto id = static_cast<TreeId>(count_);
    const std::size_t chunk = id >> kChunkBits;
    if (chunk >= kMaxChunks) throw std::length_error("tree table exhausted");
    if (!owned_[chunk]) {
      owned_[chunk] = std::make_unique<Node[]>(kChunkSize);
      chunks_[chunk].store(owned_[chunk].get(), std::memory_order_release);
    }
    Node& slot = owned_[chunk][id & (kChunkSize - 1)];
    slot.children = std::move(children);
    slot.encoding = enc;
    slot.size = size;
    slot.height = height;
    ++count_;
    index_.emplace(std::move(enc), id);
    return id;
  }

  std::shared_mutex mutex_;
  std::unordered_map<std::string, TreeId> index_;
  std::size_t count_ = 0;
  std::array<std::unique_ptr<Node[]>, kMaxChunks> owned_;
  std::array<std::atomic<const Node*>, kMaxChunks> chunks_{};

  std::mutex enum_mutex_;
  std::vector<std::unique_ptr<std::vector<Tree>>> by_size_;
};

TreeTable& table() {
  static TreeTable t;
  return t;
}

const Node& node_of(Tree t) { return table().node(t.id()); }

const std::vector<Tree>& TreeTable::of_size(std::size_t n) {
  if (n == 0) throw std::invalid_argument("trees have at least one vertex");
  {
    std::lock_guard lock(enum_mutex_);
    if (by_size_.size() > n && by_size_[n]) return *by_size_[n];
  }
  // Smaller sizes first (recursive, outside the lock).
  std::vector<Tree> pool;
  for (std::size_t m = 1; m < n; ++m) {
    const auto& level = of_size(m);
    pool.insert(pool.end(), level.begin(), level.end());
  }
  std::vector<Tree> out;
  std::vector<Tree> chosen;
  // Multisets of pool entries (nondecreasing index) with total size n - 1.
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t start, std::size_t remaining) {
    if (remaining == 0) {
      out.push_back(Tree::graft(chosen));
      return;
    }
    for (std::size_t i = start; i < pool.size(); ++i) {
      const std::size_t s = node(pool[i].id()).size;
      if (s > remaining) break;  // pool is sorted by size
      chosen.push_back(pool[i]);
      rec(i, remaining - s);
      chosen.pop_back();
    }
  };
  rec(0, n - 1);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  std::lock_guard lock(enum_mutex_);
  if (by_size_.size() <= n) by_size_.resize(n + 1);
  if (!by_size_[n]) by_size_[n] = std::make_unique<std::vector<Tree>>(std::move(out));
  return *by_size_[n];
}

template <class V>
class TreeMemo {
 public:
  template <class F>
  const V& get(Tree t, F&& compute) {
    {
      std::shared_lock lock(mutex_);
      if (auto it = map_.find(t.id()); it != map_.end()) return *it->second;
    }
    auto value = std::make_unique<V>(compute());
    std::unique_lock lock(mutex_);
    auto [it, inserted] = map_.try_emplace(t.id(), std::move(value));
    return *it->second;
  }

 private:
  std::shared_mutex mutex_;
  std::unordered_map<TreeId, std::unique_ptr<V>> map_;
};

}  // namespace

Tree::Tree() : id_(0) { (void)table(); }

Tree Tree::graft(std::vector<Tree> children) { return Tree(table().intern(std::move(children))); }

Tree Tree::from_id(TreeId id) { return Tree(id); }

Tree Tree::parse(std::string_view nesting) {
  std::size_t pos = 0;
  std::function<Tree()> parse_node = [&]() -> Tree {
    if (pos >= nesting.size() || nesting[pos] != '(')
      throw std::invalid_argument("malformed tree encoding '" + std::string(nesting) + "'");
    ++pos;
    std::vector<Tree> children;
    while (pos < nesting.size() && nesting[pos] == '(') children.push_back(parse_node());
    if (pos >= nesting.size() || nesting[pos] != ')')
      throw std::invalid_argument("malformed tree encoding '" + std::string(nesting) + "'");
    ++pos;
    return graft(std::move(children));
  };
  Tree t = parse_node();
  if (pos != nesting.size()) throw std::invalid_argument("trailing characters in tree encoding '" + std::string(nesting) + "'");
  return t;
}

Tree Tree::corolla(std::size_t n) { return graft(std::vector<Tree>(n, Tree())); }

Tree Tree::linear(std::size_t n) {
  if (n == 0) throw std::invalid_argument("Lnr_0 does not exist");
  Tree t;
  for (std::size_t i = 1; i < n; ++i) t = graft({t});
  return t;
}

std::size_t Tree::size() const { return node_of(*this).size; }
int Tree::height() const { return node_of(*this).height; }
const std::string& Tree::encoding() const { return node_of(*this).encoding; }
std::span<const Tree> Tree::children() const { return node_of(*this).children; }
bool Tree::is_vertex() const { return id_ == 0; }

std::strong_ordering operator<=>(Tree a, Tree b) {
  if (a.id_ == b.id_) return std::strong_ordering::equal;
  const Node& na = node_of(a);
  const Node& nb = node_of(b);
  if (na.size != nb.size) return na.size <=> nb.size;
  return na.encoding.compare(nb.encoding) <=> 0;
}

const std::vector<Tree>& enumerate_trees(std::size_t n) { return table().of_size(n); }

std::vector<Tree> trees_up_to(std::size_t n) {
  std::vector<Tree> out;
  for (std::size_t m = 1; m <= n; ++m) {
    const auto& level = enumerate_trees(m);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

Integer aut_order(Tree t) {
  Integer result = 1;
  const auto children = t.children();
  for (std::size_t i = 0; i < children.size();) {
    std::size_t j = i;
    while (j < children.size() && children[j] == children[i]) ++j;
    const auto m = static_cast<unsigned long>(j - i);
    Integer sub = aut_order(children[i]);
    Integer sub_pow;
    mpz_pow_ui(sub_pow.get_mpz_t(), sub.get_mpz_t(), m);
    result *= factorial(m) * sub_pow;
    i = j;
  }
  return result;
}

LabeledTree labeled(Tree t) {
  LabeledTree out;
  std::function<void(Tree, int, int)> visit = [&](Tree s, int parent, int depth) {
    const int me = static_cast<int>(out.parent.size());
    out.parent.push_back(parent);
    out.depth.push_back(depth);
    out.children.emplace_back();
    if (parent >= 0) out.children[static_cast<std::size_t>(parent)].push_back(me);
    for (Tree c : s.children()) visit(c, me, depth + 1);
  };
  visit(t, -1, 1);
  return out;
}

TreeStats tree_stats(Tree t) {
  const LabeledTree lt = labeled(t);
  TreeStats s;
  s.height = t.height();
  const std::size_t n = lt.parent.size();
  std::vector<std::size_t> sub(n, 1);
  for (std::size_t v = n; v-- > 1;) sub[static_cast<std::size_t>(lt.parent[v])] += sub[v];
  for (std::size_t v = 0; v < n; ++v) {
    if (lt.children[v].empty()) {
      ++s.leaf_count;
      s.leaf_positions.push_back(static_cast<int>(v));
    }
    ++s.height_histogram[lt.depth[v]];
  }
  s.subtree_sizes = sub;
  std::sort(s.subtree_sizes.begin(), s.subtree_sizes.end());
  return s;
}

QRat q_factorial(Tree t) {
  const TreeStats s = tree_stats(t);
  long total = 0;
  QRat prod(1);
  for (std::size_t m : s.subtree_sizes) {
    total += static_cast<long>(m);
    prod *= q_integer(static_cast<long>(m));
  }
  return prod * QRat::q_power(-total);
}

Integer tree_factorial(Tree t) {
  Integer r = 1;
  for (std::size_t m : tree_stats(t).subtree_sizes) r *= static_cast<unsigned long>(m);
  return r;
}

namespace {

// DP over children: a state is the multiset of surviving children plus a
// payload; states are merged so identical siblings collapse into binomial
// multiplicities.
std::vector<PruneEntry> compute_prune(Tree t) {
  if (t.is_vertex()) return {PruneEntry{t, 0, 1}};
  std::map<std::pair<std::vector<Tree>, unsigned>, std::int64_t> states;
  states[{{}, 0}] = 1;
  for (Tree c : t.children()) {
    std::vector<PruneEntry> options;
    if (c.is_vertex()) {
      options = {PruneEntry{c, 0, 1}, PruneEntry{c, 1, 1}};  // removed = 1 means the leaf goes
    } else {
      options = prune_leaf_subsets(c);
    }
    std::map<std::pair<std::vector<Tree>, unsigned>, std::int64_t> next;
    for (const auto& [key, cnt] : states) {
      for (const auto& opt : options) {
        std::vector<Tree> kept = key.first;
        const bool dropped = c.is_vertex() && opt.removed == 1;
        if (!dropped) kept.insert(std::upper_bound(kept.begin(), kept.end(), opt.rest), opt.rest);
        next[{std::move(kept), key.second + opt.removed}] += cnt * opt.count;
      }
    }
    states = std::move(next);
  }
  std::map<std::pair<unsigned, Tree>, std::int64_t> grouped;
  for (const auto& [key, cnt] : states) grouped[{key.second, Tree::graft(key.first)}] += cnt;
  std::vector<PruneEntry> out;
  out.reserve(grouped.size());
  for (const auto& [key, cnt] : grouped) out.push_back(PruneEntry{key.second, key.first, cnt});
  return out;
}

std::vector<Decomposition> compute_decompositions(Tree t) {
  using Key = std::pair<std::vector<Tree>, std::vector<Tree>>;  // kept children, components
  std::map<Key, std::int64_t> states;
  states[{{}, {}}] = 1;
  for (Tree c : t.children()) {
    std::map<Key, std::int64_t> next;
    const auto& sub = root_subtree_decompositions(c);
    for (const auto& [key, cnt] : states) {
      {
        Key cut = key;
        cut.second.insert(std::upper_bound(cut.second.begin(), cut.second.end(), c), c);
        next[std::move(cut)] += cnt;
      }
      for (const auto& d : sub) {
        Key keep = key;
        keep.first.insert(std::upper_bound(keep.first.begin(), keep.first.end(), d.kept), d.kept);
        for (Tree comp : d.components)
          keep.second.insert(std::upper_bound(keep.second.begin(), keep.second.end(), comp), comp);
        next[std::move(keep)] += cnt * d.multiplicity;
      }
    }
    states = std::move(next);
  }
  std::map<std::pair<Tree, std::vector<Tree>>, std::int64_t> grouped;
  for (const auto& [key, cnt] : states) grouped[{Tree::graft(key.first), key.second}] += cnt;
  std::vector<Decomposition> out;
  out.reserve(grouped.size());
  for (const auto& [key, cnt] : grouped) out.push_back(Decomposition{key.first, key.second, cnt});
  // Largest kept part first: the unpruned tree leads.
  std::stable_sort(out.begin(), out.end(), [](const Decomposition& a, const Decomposition& b) { return a.kept > b.kept; });
  return out;
}

TreeMemo<std::vector<PruneEntry>>& prune_memo() {
  static TreeMemo<std::vector<PruneEntry>> m;
  return m;
}

TreeMemo<std::vector<Decomposition>>& decomposition_memo() {
  static TreeMemo<std::vector<Decomposition>> m;
  return m;
}

}  // namespace

const std::vector<PruneEntry>& prune_leaf_subsets(Tree t) {
  return prune_memo().get(t, [t] { return compute_prune(t); });
}

std::vector<PruneEntry> prune_leaf_subsets(Tree t, bool proper_only) {
  std::vector<PruneEntry> out = prune_leaf_subsets(t);
  if (proper_only) std::erase_if(out, [](const PruneEntry& e) { return e.removed == 0; });
  return out;
}

const std::vector<Decomposition>& root_subtree_decompositions(Tree t) {
  return decomposition_memo().get(t, [t] { return compute_decompositions(t); });
}

Tree partition_tree(std::span<const int> parts) {
  std::vector<Tree> children;
  for (int p : parts) {
    if (p <= 0) throw std::invalid_argument("partition parts must be positive");
    children.push_back(Tree::linear(static_cast<std::size_t>(p)));
  }
  return Tree::graft(std::move(children));
}

VertexCoverInfo min_vertex_covers_root(Tree t) {
  // with[v]: smallest cover of the subtree at v containing v; without[v]: not containing v.
  struct Best {
    int with;
    int without;
  };
  std::function<Best(Tree)> solve = [&](Tree s) -> Best {
    Best b{1, 0};
    for (Tree c : s.children()) {
      const Best cb = solve(c);
      b.with += std::min(cb.with, cb.without);
      b.without += cb.with;
    }
    return b;
  };
  const Best root = solve(t);
  VertexCoverInfo info;
  info.cover_size = std::min(root.with, root.without);
  info.some_cover_contains_root = root.with == info.cover_size;
  info.no_cover_contains_root = !info.some_cover_contains_root;
  return info;
}

}  // namespace pawn

#pragma once

// Coefficients defined by a per-tree recursion that only reads strictly
// smaller trees. Values are computed on demand and cached; series() fills
// whole degrees, in parallel within a degree.

#include <functional>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <unordered_map>
#include <utility>

#include "pawn/parallel.hpp"
#include "pawn/tree_series.hpp"

namespace pawn {

template <class R>
class MemoSeries {
 public:
  using Lookup = std::function<const R&(Tree)>;
  using Rule = std::function<R(Tree, const Lookup&)>;

  explicit MemoSeries(Rule rule) : rule_(std::move(rule)) {}
  MemoSeries(const MemoSeries&) = delete;
  MemoSeries& operator=(const MemoSeries&) = delete;

  const R& coefficient(Tree t) {
    {
      std::shared_lock lock(mutex_);
      if (auto it = memo_.find(t.id()); it != memo_.end()) return *it->second;
    }
    const Lookup lookup = [this](Tree s) -> const R& { return coefficient(s); };
    auto value = std::make_unique<R>(rule_(t, lookup));
    std::unique_lock lock(mutex_);
    auto [it, inserted] = memo_.try_emplace(t.id(), std::move(value));
    return *it->second;
  }

  TreeSeries<R> series(std::size_t order, unsigned workers = 1) {
    TreeSeries<R> out(order);
    for (std::size_t n = 1; n <= order; ++n) {
      const auto& level = enumerate_trees(n);
      parallel_for(level.size(), workers, [&](std::size_t i) { (void)coefficient(level[i]); });
      for (Tree t : level) out.set(t, coefficient(t));
    }
    return out;
  }

 private:
  Rule rule_;
  std::shared_mutex mutex_;
  std::unordered_map<TreeId, std::unique_ptr<R>> memo_;
};

}  // namespace pawn

#pragma once

#include <pandora/types.hpp>

#include <atomic>
#include <numeric>
#include <span>
#include <vector>

namespace pandora {

/// Sequential disjoint sets with union by size and path halving.
class UnionFind {
public:
  explicit UnionFind(std::size_t size) : parent_(size), size_(size, 1) {
    std::iota(parent_.begin(), parent_.end(), VertexId{0});
  }

  std::size_t size() const { return parent_.size(); }

  VertexId find(VertexId x) {
    check(x);
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  /// Returns the representative of the merged class.
  VertexId unite(VertexId x, VertexId y) {
    x = find(x);
    y = find(y);
    if (x == y)
      return x;
    if (size_[x] < size_[y])
      std::swap(x, y);
    parent_[y] = x;
    size_[x] += size_[y];
    return x;
  }

  std::size_t classSize(VertexId x) { return size_[find(x)]; }

private:
  void check(VertexId x) const {
    if (x >= parent_.size())
      throw std::out_of_range("union-find index " + std::to_string(x) +
                              " out of range " + std::to_string(parent_.size()));
  }

  std::vector<VertexId> parent_;
  std::vector<std::size_t> size_;
};

/// Lock-free disjoint sets for concurrent `unite` calls.
///
/// A root is only ever linked under a smaller root, so once all unites have
/// finished every class is represented by its minimum element regardless of
/// the order in which the calls ran.
class ConcurrentUnionFind {
public:
  explicit ConcurrentUnionFind(std::size_t size) : parent_(size) {
    for (std::size_t i = 0; i < size; ++i)
      parent_[i].store(static_cast<VertexId>(i), std::memory_order_relaxed);
  }

  std::size_t size() const { return parent_.size(); }

  VertexId find(VertexId x) {
    if (x >= parent_.size())
      throw std::out_of_range("union-find index out of range");
    auto p = parent_[x].load(std::memory_order_relaxed);
    while (p != x) {
      auto const gp = parent_[p].load(std::memory_order_relaxed);
      // Path halving; losing the race just leaves a longer path.
      if (gp != p)
        parent_[x].compare_exchange_weak(p, gp, std::memory_order_relaxed);
      x = p;
      p = parent_[x].load(std::memory_order_relaxed);
    }
    return x;
  }

  void unite(VertexId x, VertexId y) {
    while (true) {
      x = find(x);
      y = find(y);
      if (x == y)
        return;
      if (x < y)
        std::swap(x, y);
      // x is the larger root; hang it under y if it is still a root.
      VertexId expected = x;
      if (parent_[x].compare_exchange_strong(expected, y, std::memory_order_acq_rel))
        return;
    }
  }

private:
  std::vector<std::atomic<VertexId>> parent_;
};

} // namespace pandora

#pragma once

#include <cstddef>
#include <numeric>
#include <utility>
#include <vector>

namespace vmc {

// Disjoint sets with union by size and path halving.
class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n), size_(n, 1), components_(n) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }

  std::size_t find(std::size_t v) {
    while (parent_[v] != v) {
      parent_[v] = parent_[parent_[v]];
      v = parent_[v];
    }
    return v;
  }

  // Joins two distinct roots; returns the surviving root. Ties break toward
  // the smaller index so merges are deterministic.
  std::size_t unite_roots(std::size_t ra, std::size_t rb) {
    if (size_[ra] < size_[rb] || (size_[ra] == size_[rb] && rb < ra)) std::swap(ra, rb);
    parent_[rb] = ra;
    size_[ra] += size_[rb];
    --components_;
    return ra;
  }

  std::size_t size_of(std::size_t root) const { return size_[root]; }
  std::size_t component_count() const { return components_; }
  std::size_t element_count() const { return parent_.size(); }

 private:
  std::vector<std::size_t> parent_;
  std::vector<std::size_t> size_;
  std::size_t components_;
};

}  // namespace vmc

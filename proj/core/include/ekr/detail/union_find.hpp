#pragma once

#include <cstdint>
#include <numeric>
#include <utility>
#include <vector>

namespace ekr::detail {

// Union-find by size without path compression so merges can be undone in LIFO
// order. Also maintains the product of all component sizes.
class RollbackUnionFind {
 public:
  explicit RollbackUnionFind(int vertices) : parent_(vertices + 1), size_(vertices + 1, 1) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }

  int find(int x) const {
    while (parent_[x] != x) x = parent_[x];
    return x;
  }

  // Returns false (and records nothing) if a and b are already connected.
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (size_[a] < size_[b]) std::swap(a, b);
    history_.push_back({b, product_});
    product_ = product_ / (static_cast<std::uint64_t>(size_[a]) * size_[b]) *
               static_cast<std::uint64_t>(size_[a] + size_[b]);
    parent_[b] = a;
    size_[a] += size_[b];
    return true;
  }

  void undo() {
    auto [b, product] = history_.back();
    history_.pop_back();
    int a = parent_[b];
    size_[a] -= size_[b];
    parent_[b] = b;
    product_ = product;
  }

  std::size_t merges() const noexcept { return history_.size(); }
  int component_size(int x) const { return size_[find(x)]; }
  std::uint64_t size_product() const noexcept { return product_; }

 private:
  struct Step {
    int child;
    std::uint64_t product;
  };
  std::vector<int> parent_;
  std::vector<int> size_;
  std::vector<Step> history_;
  std::uint64_t product_ = 1;
};

}  // namespace ekr::detail

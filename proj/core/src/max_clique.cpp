#include "ekr/max_clique.hpp"

#include <algorithm>
#include <numeric>

namespace ekr {

namespace {

using Bits = std::vector<std::uint64_t>;

bool any(const Bits& bits) {
  return std::any_of(bits.begin(), bits.end(), [](std::uint64_t w) { return w != 0; });
}

// Removal order of the min-degree peeling, reversed: vertices of the densest
// core come first. Ties break toward the lowest index.
std::vector<std::size_t> degeneracy_order(const BitMatrix& adj) {
  const std::size_t n = adj.size();
  std::vector<std::size_t> degree(n);
  for (std::size_t v = 0; v < n; ++v) degree[v] = adj.row_count(v);
  std::vector<bool> removed(n, false);
  std::vector<std::size_t> order;
  order.reserve(n);
  for (std::size_t step = 0; step < n; ++step) {
    std::size_t pick = n;
    for (std::size_t v = 0; v < n; ++v) {
      if (!removed[v] && (pick == n || degree[v] < degree[pick])) pick = v;
    }
    removed[pick] = true;
    order.push_back(pick);
    for (std::size_t u = 0; u < n; ++u) {
      if (!removed[u] && adj.test(pick, u)) --degree[u];
    }
  }
  std::reverse(order.begin(), order.end());
  return order;
}

class Search {
 public:
  Search(const BitMatrix& adj, std::uint64_t budget) : adj_(adj), budget_(budget) {}

  void run(std::vector<std::size_t> seed) {
    best_ = std::move(seed);
    Bits all(adj_.words_per_row(), 0);
    for (std::size_t v = 0; v < adj_.size(); ++v) all[v / 64] |= std::uint64_t{1} << (v % 64);
    std::vector<std::size_t> current;
    expand(current, std::move(all));
  }

  const std::vector<std::size_t>& best() const { return best_; }
  bool aborted() const { return aborted_; }
  std::uint64_t nodes() const { return nodes_; }

 private:
  void expand(std::vector<std::size_t>& current, Bits candidates) {
    if (++nodes_ > budget_) {
      aborted_ = true;
      return;
    }
    // Greedy sequential coloring; colors[i] bounds the clique size reachable
    // from vertices[0..i].
    std::vector<std::size_t> vertices;
    std::vector<std::size_t> colors;
    Bits uncolored = candidates;
    Bits pool(candidates.size());
    std::size_t color = 0;
    while (any(uncolored)) {
      ++color;
      pool = uncolored;
      for (std::size_t w = 0; w < pool.size(); ++w) {
        while (pool[w]) {
          const std::size_t v = w * 64 + std::countr_zero(pool[w]);
          const std::uint64_t bit = std::uint64_t{1} << (v % 64);
          pool[w] &= ~bit;
          uncolored[w] &= ~bit;
          auto neighbours = adj_.row(v);
          for (std::size_t x = w; x < pool.size(); ++x) pool[x] &= ~neighbours[x];
          vertices.push_back(v);
          colors.push_back(color);
        }
      }
    }

    for (std::size_t i = vertices.size(); i-- > 0;) {
      if (current.size() + colors[i] <= best_.size()) return;
      const std::size_t v = vertices[i];
      current.push_back(v);
      Bits next(candidates.size());
      auto neighbours = adj_.row(v);
      for (std::size_t w = 0; w < next.size(); ++w) next[w] = candidates[w] & neighbours[w];
      if (!any(next)) {
        if (current.size() > best_.size()) best_ = current;
      } else {
        expand(current, std::move(next));
      }
      current.pop_back();
      if (aborted_) return;
      candidates[v / 64] &= ~(std::uint64_t{1} << (v % 64));
    }
  }

  const BitMatrix& adj_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  bool aborted_ = false;
  std::vector<std::size_t> best_;
};

}  // namespace

CliqueResult maximum_clique(const BitMatrix& adjacency, std::uint64_t node_budget) {
  CliqueResult result;
  const std::size_t n = adjacency.size();
  if (n == 0) {
    result.optimal = true;
    return result;
  }

  const auto order = degeneracy_order(adjacency);
  BitMatrix local(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j && adjacency.test(order[i], order[j])) local.set(i, j);
    }
  }

  std::vector<std::size_t> greedy;
  for (std::size_t v = 0; v < n; ++v) {
    if (std::all_of(greedy.begin(), greedy.end(), [&](std::size_t u) { return local.test(u, v); })) greedy.push_back(v);
  }

  Search search(local, node_budget);
  search.run(std::move(greedy));
  for (std::size_t v : search.best()) result.vertices.push_back(order[v]);
  std::sort(result.vertices.begin(), result.vertices.end());
  result.optimal = !search.aborted();
  result.nodes = search.nodes();
  return result;
}

}  // namespace ekr

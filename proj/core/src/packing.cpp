#include "ekr/detail/union_find.hpp"
#include "ekr/errors.hpp"
#include "ekr/gammagraph.hpp"

#include <algorithm>
#include <limits>
#include <string>

namespace ekr {

namespace {

struct PartitionMinimum {
  int value = std::numeric_limits<int>::max();
  std::vector<int> blocks;  // restricted-growth string
  std::uint64_t cross = 0;
};

// Minimizes floor(cross / (k - 1)) over all set partitions with k >= 2 blocks,
// visiting restricted-growth strings a[0] = 0, a[i] <= 1 + max(a[0..i-1]).
PartitionMinimum minimize_over_partitions(const SimpleGraph& g) {
  const int n = g.n();
  PartitionMinimum best;
  std::vector<int> a(n, 0);
  std::vector<int> prefix_max(n, 0);
  auto evaluate = [&] {
    const int k = prefix_max[n - 1] + 1;
    if (k < 2) return;
    std::uint64_t cross = 0;
    for (const Edge& e : g.edges()) cross += a[e.u - 1] != a[e.v - 1] ? 1 : 0;
    const int value = static_cast<int>(cross / static_cast<std::uint64_t>(k - 1));
    if (value < best.value) {
      best.value = value;
      best.blocks = a;
      best.cross = cross;
    }
  };
  auto recurse = [&](auto&& self, int i) -> void {
    if (i == n) {
      evaluate();
      return;
    }
    for (int b = 0; b <= prefix_max[i - 1] + 1; ++b) {
      a[i] = b;
      prefix_max[i] = std::max(prefix_max[i - 1], b);
      self(self, i + 1);
    }
  };
  recurse(recurse, 1);
  return best;
}

// Assigns graph edges, in order, to one of `trees` forests or to nobody until
// every forest spans. Pruning: each vertex must keep enough undecided edges
// to reach the forests that do not touch it yet; empty forests are
// interchangeable, so only the first empty one is tried.
class PackingSearch {
 public:
  PackingSearch(const SimpleGraph& g, int trees, std::uint64_t budget)
      : g_(g),
        n_(g.n()),
        trees_(trees),
        budget_(budget),
        slack_(static_cast<int>(g.edges().size()) - trees * (g.n() - 1)),
        forests_(trees, detail::RollbackUnionFind(g.n())),
        sizes_(trees, 0),
        touches_(trees, std::vector<int>(g.n() + 1, 0)),
        missing_(g.n() + 1, trees),
        undecided_(g.n() + 1, 0),
        owner_(g.edges().size(), -1) {
    for (const Edge& e : g.edges()) {
      ++undecided_[e.u];
      ++undecided_[e.v];
    }
  }

  bool run() {
    if (slack_ < 0) return false;
    return recurse(0, 0);
  }

  std::uint64_t nodes() const { return nodes_; }
  bool exhausted() const { return nodes_ > budget_; }

  std::vector<LabeledTree> trees() const {
    std::vector<std::vector<Edge>> edges(trees_);
    for (std::size_t i = 0; i < owner_.size(); ++i) {
      if (owner_[i] >= 0) edges[owner_[i]].push_back(g_.edges()[i]);
    }
    std::vector<LabeledTree> out;
    for (auto& list : edges) out.emplace_back(Forest(n_, std::move(list)));
    std::sort(out.begin(), out.end());
    return out;
  }

 private:
  bool feasible(Vertex x) const { return missing_[x] <= undecided_[x]; }

  void touch(int tree, Vertex x, int delta) {
    int before = touches_[tree][x];
    touches_[tree][x] += delta;
    if (before == 0 && delta > 0) --missing_[x];
    if (touches_[tree][x] == 0 && delta < 0) ++missing_[x];
  }

  bool recurse(std::size_t index, int skipped) {
    if (std::all_of(sizes_.begin(), sizes_.end(), [&](int s) { return s == n_ - 1; })) return true;
    if (index == g_.edges().size()) return false;
    if (++nodes_ > budget_) return false;

    const Edge e = g_.edges()[index];
    --undecided_[e.u];
    --undecided_[e.v];
    bool found = false;
    bool tried_empty = false;
    for (int i = 0; i < trees_ && !found; ++i) {
      if (sizes_[i] == n_ - 1) continue;
      if (sizes_[i] == 0) {
        if (tried_empty) continue;
        tried_empty = true;
      }
      if (!forests_[i].unite(e.u, e.v)) continue;
      ++sizes_[i];
      touch(i, e.u, 1);
      touch(i, e.v, 1);
      owner_[index] = i;
      if (feasible(e.u) && feasible(e.v)) found = recurse(index + 1, skipped);
      if (!found) {
        owner_[index] = -1;
        touch(i, e.u, -1);
        touch(i, e.v, -1);
        --sizes_[i];
        forests_[i].undo();
      }
      if (exhausted()) break;
    }
    if (!found && !exhausted() && skipped < slack_ && feasible(e.u) && feasible(e.v)) {
      found = recurse(index + 1, skipped + 1);
    }
    if (!found) {
      ++undecided_[e.u];
      ++undecided_[e.v];
    }
    return found;
  }

  const SimpleGraph& g_;
  int n_;
  int trees_;
  std::uint64_t budget_;
  int slack_;
  std::uint64_t nodes_ = 0;
  std::vector<detail::RollbackUnionFind> forests_;
  std::vector<int> sizes_;
  std::vector<std::vector<int>> touches_;
  std::vector<int> missing_;    // forests with no edge at the vertex
  std::vector<int> undecided_;  // edges at the vertex not yet assigned or skipped
  std::vector<int> owner_;
};

}  // namespace

PackingResult packing_number(const SimpleGraph& g, std::uint64_t node_budget) {
  if (g.n() < 2) throw InvalidInput("packing needs n >= 2");
  if (g.n() > kMaxPartitionVertices) {
    throw CapExceeded("partition cap", kMaxPartitionVertices, static_cast<std::uint64_t>(g.n()));
  }
  PackingResult result;
  auto minimum = minimize_over_partitions(g);
  result.value = minimum.value;
  result.cross_edges = minimum.cross;
  const int blocks = *std::max_element(minimum.blocks.begin(), minimum.blocks.end()) + 1;
  result.partition.assign(blocks, {});
  for (int i = 0; i < g.n(); ++i) result.partition[minimum.blocks[i]].push_back(i + 1);

  if (result.value == 0) {
    result.witness_complete = true;
    return result;
  }
  PackingSearch search(g, result.value, node_budget);
  if (search.run()) {
    result.witness = search.trees();
    result.witness_complete = true;
  }
  result.nodes = search.nodes();
  return result;
}

bool is_edge_disjoint_packing(const SimpleGraph& g, std::span<const LabeledTree> trees) {
  std::vector<Edge> used;
  for (const auto& tree : trees) {
    if (tree.n() != g.n()) return false;
    for (const Edge& e : tree.edges()) {
      if (!std::binary_search(g.edges().begin(), g.edges().end(), e)) return false;
      used.push_back(e);
    }
  }
  std::sort(used.begin(), used.end());
  return std::adjacent_find(used.begin(), used.end()) == used.end();
}

}  // namespace ekr

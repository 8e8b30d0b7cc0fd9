#pragma once

#include "ekr/numeric.hpp"

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

namespace ekr {

// Vertex labels are 1-based: the vertex set of K_n is {1, ..., n}.
using Vertex = int;

// An unordered pair stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  constexpr Edge() = default;
  // Canonicalizes the endpoint order; rejects loops.
  Edge(Vertex a, Vertex b);

  friend constexpr auto operator<=>(const Edge&, const Edge&) = default;
};

// Largest n for which every edge of K_n fits in a 64-bit mask (C(11,2) = 55).
inline constexpr int kMaxMaskVertices = 11;

using EdgeMask = std::uint64_t;

// Position of e in the lexicographic order of the edges of K_n.
int edge_index(int n, Edge e);
Edge edge_at(int n, int index);
inline int edge_count(int n) { return n * (n - 1) / 2; }

EdgeMask to_mask(int n, std::span<const Edge> edges);
std::vector<Edge> from_mask(int n, EdgeMask mask);

// Acyclic edge set on [n], kept in strict lexicographic order so that equal
// forests compare equal.
class Forest {
 public:
  Forest() = default;
  explicit Forest(int n) : n_(n) {}
  // Throws InvalidInput on labels outside [1, n], duplicates, or cycles.
  Forest(int n, std::vector<Edge> edges);

  static std::optional<Forest> try_make(int n, std::vector<Edge> edges);

  int n() const noexcept { return n_; }
  std::span<const Edge> edges() const noexcept { return edges_; }
  std::size_t size() const noexcept { return edges_.size(); }
  bool empty() const noexcept { return edges_.empty(); }
  bool contains(Edge e) const;
  bool is_spanning_tree() const noexcept {
    return n_ >= 1 && edges_.size() == static_cast<std::size_t>(n_ - 1);
  }
  std::vector<int> degrees() const;  // index 0 unused

  friend bool operator==(const Forest&, const Forest&) = default;
  friend auto operator<=>(const Forest& a, const Forest& b) {
    if (auto c = a.n_ <=> b.n_; c != 0) return c;
    return a.edges_ <=> b.edges_;
  }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
};

// A spanning tree of K_n: a forest with exactly n - 1 edges.
class LabeledTree {
 public:
  // Throws InvalidInput unless forest spans [n].
  explicit LabeledTree(Forest forest);
  LabeledTree(int n, std::vector<Edge> edges) : LabeledTree(Forest(n, std::move(edges))) {}

  int n() const noexcept { return forest_.n(); }
  std::span<const Edge> edges() const noexcept { return forest_.edges(); }
  const Forest& forest() const noexcept { return forest_; }

  friend bool operator==(const LabeledTree&, const LabeledTree&) = default;
  friend auto operator<=>(const LabeledTree&, const LabeledTree&) = default;

 private:
  Forest forest_;
};

struct PruferCode {
  int n = 0;
  std::vector<Vertex> code;  // length n - 2, entries in [1, n]

  friend bool operator==(const PruferCode&, const PruferCode&) = default;
};

// Base-n value of a Prüfer code (digit = label - 1, most significant first).
struct TreeIndex {
  std::uint64_t value = 0;
  friend constexpr auto operator<=>(const TreeIndex&, const TreeIndex&) = default;
};

// Largest n with n^{n-2} < 2^64.
inline constexpr int kMaxIndexVertices = 17;
inline constexpr int kDefaultEnumerationCap = 8;

// Smallest-leaf deletion convention. Throws InvalidInput for n < 2.
PruferCode prufer_encode(const LabeledTree& tree);
// Throws InvalidInput for codes of the wrong length or with labels outside [1, n].
LabeledTree prufer_decode(const PruferCode& code);

TreeIndex tree_index(const PruferCode& code);
PruferCode code_at(int n, TreeIndex index);
// n^{n-2}; requires 2 <= n <= kMaxIndexVertices.
std::uint64_t tree_count(int n);

// Mask of the tree with the given Prüfer code; requires n <= kMaxMaskVertices.
EdgeMask decode_to_mask(int n, std::span<const Vertex> code);

// Calls visit(index, tree) for every labelled tree on [n] in TreeIndex order.
// Throws CapExceeded when n > cap and InvalidInput when n < 2.
void enumerate_trees(int n, const std::function<void(TreeIndex, const LabeledTree&)>& visit,
                     int cap = kDefaultEnumerationCap);

// Same as enumerate_trees restricted to indices in [first, last); for
// range-partitioned parallel iteration.
void enumerate_tree_range(int n, std::uint64_t first, std::uint64_t last,
                          const std::function<void(TreeIndex, const LabeledTree&)>& visit);

// All trees of K_n as edge masks, in TreeIndex order.
class TreeTable {
 public:
  // Throws CapExceeded when n > cap; requires n <= kMaxMaskVertices.
  explicit TreeTable(int n, int cap = kDefaultEnumerationCap);

  int n() const noexcept { return n_; }
  std::size_t size() const noexcept { return masks_.size(); }
  std::span<const EdgeMask> masks() const noexcept { return masks_; }
  EdgeMask mask(std::size_t index) const { return masks_[index]; }
  LabeledTree tree(std::size_t index) const;

 private:
  int n_;
  std::vector<EdgeMask> masks_;
};

struct Components {
  std::vector<std::vector<Vertex>> parts;  // non-trivial components, ordered by smallest label
  std::vector<Vertex> isolated;

  std::vector<int> sizes() const;
};

Components components(const Forest& forest);

std::size_t intersection_size(const Forest& a, const Forest& b);
inline std::size_t intersection_size(const LabeledTree& a, const LabeledTree& b) {
  return intersection_size(a.forest(), b.forest());
}

bool is_star(const LabeledTree& tree);

// Largest number of other forest edges sharing an endpoint with a single edge.
int line_graph_max_degree(const Forest& forest);
// Some edge meets at least (n - 1) / d other edges. Requires d > 0.
bool is_d_star_like(const Forest& forest, const Rational& d);
// The edge attaining line_graph_max_degree (lowest in lexicographic order).
std::optional<Edge> star_like_witness(const Forest& forest, const Rational& d);

// Decodes a uniformly random Prüfer code drawn from a seeded mt19937_64.
LabeledTree sample_uniform_tree(int n, std::uint64_t seed);

// Visits every forest on [n] with at most max_edges edges, as a strictly
// increasing edge list, in lexicographic DFS order (empty forest first).
void for_each_forest(int n, int max_edges, const std::function<void(std::span<const Edge>)>& visit);

// Frequently used shapes.
LabeledTree make_star(int n, Vertex center);
LabeledTree make_path(int n);  // 1-2-...-n
Forest make_matching(int n, int edges);  // {1,2},{3,4},...
bool is_acyclic(int n, std::span<const Edge> edges);

}  // namespace ekr

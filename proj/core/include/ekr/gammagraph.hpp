#pragma once

#include "ekr/bit_matrix.hpp"
#include "ekr/treecore.hpp"

#include <nlohmann/json.hpp>

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace ekr {

inline constexpr std::size_t kDefaultGraphBuildCap = 20000;
inline constexpr std::uint64_t kDefaultNodeBudget = 200'000'000;
inline constexpr int kMaxPartitionVertices = 10;

// Loopless simple graph on [n] with a canonical sorted edge list.
class SimpleGraph {
 public:
  // Throws InvalidInput on labels outside [1, n] or duplicate edges.
  SimpleGraph(int n, std::vector<Edge> edges);

  static SimpleGraph complete(int n);
  static SimpleGraph cycle(int n);
  static SimpleGraph path(int n);
  // "K<n>", "C<n>", "P<n>"; nullopt for anything else.
  static std::optional<SimpleGraph> from_alias(std::string_view alias);

  int n() const noexcept { return n_; }
  std::span<const Edge> edges() const noexcept { return edges_; }
  bool is_complete() const noexcept { return edges_.size() == static_cast<std::size_t>(edge_count(n_)); }
  bool is_connected() const;

 private:
  int n_;
  std::vector<Edge> edges_;
};

// Every spanning tree of g exactly once, by include/exclude branching on the
// edge list; an edge may only be excluded if it is not a bridge of what
// remains. Includes come first, so trees arrive in lexicographic order of
// their edge lists. Disconnected g yields nothing. Throws CapExceeded after
// `cap` trees.
void for_each_spanning_tree(const SimpleGraph& g, const std::function<void(std::span<const Edge>)>& visit,
                            std::size_t cap = kDefaultGraphBuildCap);
std::vector<LabeledTree> enumerate_spanning_trees(const SimpleGraph& g, std::size_t cap = kDefaultGraphBuildCap);

// Γ_t(G): vertices are the spanning trees of G, two trees adjacent iff they
// share fewer than t edges. For K_n the vertices are in TreeIndex order.
class DisjointnessGraph {
 public:
  DisjointnessGraph(SimpleGraph graph, int t, std::vector<EdgeMask> trees, BitMatrix adjacency);

  const SimpleGraph& graph() const noexcept { return graph_; }
  int t() const noexcept { return t_; }
  std::size_t vertex_count() const noexcept { return trees_.size(); }
  std::size_t edge_count() const;
  bool adjacent(std::size_t a, std::size_t b) const { return adjacency_.test(a, b); }
  const BitMatrix& adjacency() const noexcept { return adjacency_; }
  // Masks over the positions of graph().edges().
  std::span<const EdgeMask> tree_masks() const noexcept { return trees_; }
  LabeledTree tree(std::size_t vertex) const;
  std::size_t shared_edges(std::size_t a, std::size_t b) const;

 private:
  SimpleGraph graph_;
  int t_;
  std::vector<EdgeMask> trees_;
  BitMatrix adjacency_;
};

// Throws CapExceeded when G has more than `cap` spanning trees, InvalidInput
// when G has more than 64 edges or t < 1.
DisjointnessGraph build_gamma(const SimpleGraph& g, int t, std::size_t cap = kDefaultGraphBuildCap,
                              unsigned workers = 1);

// Bit-packed subset of the vertices of a DisjointnessGraph.
class TreeFamily {
 public:
  explicit TreeFamily(std::size_t universe) : universe_(universe), bits_((universe + 63) / 64, 0) {}

  void insert(std::size_t vertex) { bits_[vertex / 64] |= std::uint64_t{1} << (vertex % 64); }
  bool contains(std::size_t vertex) const { return (bits_[vertex / 64] >> (vertex % 64)) & 1u; }
  std::size_t size() const;
  std::size_t universe() const noexcept { return universe_; }
  std::vector<std::size_t> members() const;

 private:
  std::size_t universe_;
  std::vector<std::uint64_t> bits_;
};

struct FamilySearchResult {
  TreeFamily family;
  bool optimal = false;
  std::uint64_t nodes = 0;
};

// Largest family of pairwise non-adjacent trees (pairwise t-intersecting).
FamilySearchResult max_independent_set(const DisjointnessGraph& gamma, std::uint64_t node_budget = kDefaultNodeBudget);
// Largest family of pairwise adjacent trees.
FamilySearchResult max_clique(const DisjointnessGraph& gamma, std::uint64_t node_budget = kDefaultNodeBudget);

bool is_independent(const DisjointnessGraph& gamma, const TreeFamily& family);
bool is_clique(const DisjointnessGraph& gamma, const TreeFamily& family);

struct PackingResult {
  int value = 0;  // min over partitions of floor(cross / (k - 1))
  std::vector<std::vector<Vertex>> partition;  // a partition attaining the minimum
  std::uint64_t cross_edges = 0;
  std::vector<LabeledTree> witness;  // pairwise edge-disjoint spanning trees
  bool witness_complete = false;     // witness.size() == value
  std::uint64_t nodes = 0;
};

// Tree packing number from the partition formula (restricted-growth strings,
// n <= 10) plus a certifying packing found by backtracking edge assignment.
PackingResult packing_number(const SimpleGraph& g, std::uint64_t node_budget = kDefaultNodeBudget);

bool is_edge_disjoint_packing(const SimpleGraph& g, std::span<const LabeledTree> trees);

// Binary adjacency dump, all integers little-endian:
//   bytes 0..7   magic "EKRGAMMA"
//   u32          n
//   u32          t
//   u64          vertex count V
//   V rows of ceil(V/64) u64 words; bit j of row i is word j/64, bit j%64.
void write_gamma_dump(const DisjointnessGraph& gamma, std::ostream& out);

struct GammaDump {
  int n = 0;
  int t = 0;
  BitMatrix adjacency;
};
GammaDump read_gamma_dump(std::istream& in);

// Vertex/edge summary; per-vertex tree lists and the adjacency edge list are
// included only when `full` is set.
nlohmann::ordered_json gamma_summary(const DisjointnessGraph& gamma, bool full);

}  // namespace ekr

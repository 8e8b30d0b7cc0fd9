#include "ekr/gammagraph.hpp"

#include "ekr/detail/union_find.hpp"
#include "ekr/errors.hpp"
#include "ekr/max_clique.hpp"
#include "ekr/parallel.hpp"
#include "ekr/tree_io.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <charconv>
#include <istream>
#include <ostream>
#include <string>

namespace ekr {

SimpleGraph::SimpleGraph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
  if (n_ < 1) throw InvalidInput("graph needs at least one vertex");
  for (const Edge& e : edges_) {
    if (e.u < 1 || e.v > n_ || e.u >= e.v) {
      throw InvalidInput("edge {" + std::to_string(e.u) + "," + std::to_string(e.v) + "} outside [1," +
                         std::to_string(n_) + "]");
    }
  }
  std::sort(edges_.begin(), edges_.end());
  if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end()) throw InvalidInput("duplicate edge in graph");
}

SimpleGraph SimpleGraph::complete(int n) {
  std::vector<Edge> edges;
  for (Vertex u = 1; u <= n; ++u) {
    for (Vertex v = u + 1; v <= n; ++v) edges.emplace_back(u, v);
  }
  return SimpleGraph(n, std::move(edges));
}

SimpleGraph SimpleGraph::cycle(int n) {
  if (n < 3) throw InvalidInput("cycles need n >= 3");
  std::vector<Edge> edges;
  for (Vertex u = 1; u < n; ++u) edges.emplace_back(u, u + 1);
  edges.emplace_back(1, n);
  return SimpleGraph(n, std::move(edges));
}

SimpleGraph SimpleGraph::path(int n) {
  std::vector<Edge> edges;
  for (Vertex u = 1; u < n; ++u) edges.emplace_back(u, u + 1);
  return SimpleGraph(n, std::move(edges));
}

std::optional<SimpleGraph> SimpleGraph::from_alias(std::string_view alias) {
  if (alias.size() < 2) return std::nullopt;
  int n = 0;
  auto digits = alias.substr(1);
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), n);
  if (ec != std::errc() || ptr != digits.data() + digits.size() || n < 1) return std::nullopt;
  switch (alias.front()) {
    case 'K': return complete(n);
    case 'C': return cycle(n);
    case 'P': return path(n);
    default: return std::nullopt;
  }
}

bool SimpleGraph::is_connected() const {
  detail::RollbackUnionFind uf(n_);
  std::size_t merges = 0;
  for (const Edge& e : edges_) merges += uf.unite(e.u, e.v) ? 1 : 0;
  return merges == static_cast<std::size_t>(n_ - 1);
}

void for_each_spanning_tree(const SimpleGraph& g, const std::function<void(std::span<const Edge>)>& visit,
                            std::size_t cap) {
  if (!g.is_connected()) return;
  const int n = g.n();
  const auto edges = g.edges();
  if (n == 1) {
    visit({});
    return;
  }
  detail::RollbackUnionFind chosen_uf(n);
  std::vector<Edge> chosen;
  std::size_t emitted = 0;

  // Is chosen ∪ edges[from..] connected?
  auto still_connected = [&](std::size_t from) {
    detail::RollbackUnionFind uf(n);
    int merges = 0;
    for (const Edge& e : chosen) merges += uf.unite(e.u, e.v) ? 1 : 0;
    for (std::size_t i = from; i < edges.size() && merges < n - 1; ++i) merges += uf.unite(edges[i].u, edges[i].v) ? 1 : 0;
    return merges == n - 1;
  };

  auto recurse = [&](auto&& self, std::size_t index) -> void {
    if (static_cast<int>(chosen.size()) == n - 1) {
      if (++emitted > cap) throw CapExceeded("spanning-tree cap", cap, emitted);
      visit(chosen);
      return;
    }
    const Edge e = edges[index];
    if (chosen_uf.unite(e.u, e.v)) {
      chosen.push_back(e);
      self(self, index + 1);
      chosen.pop_back();
      chosen_uf.undo();
    }
    if (still_connected(index + 1)) self(self, index + 1);
  };
  recurse(recurse, 0);
}

std::vector<LabeledTree> enumerate_spanning_trees(const SimpleGraph& g, std::size_t cap) {
  std::vector<LabeledTree> out;
  for_each_spanning_tree(
      g, [&](std::span<const Edge> edges) { out.emplace_back(Forest(g.n(), {edges.begin(), edges.end()})); }, cap);
  return out;
}

DisjointnessGraph::DisjointnessGraph(SimpleGraph graph, int t, std::vector<EdgeMask> trees, BitMatrix adjacency)
    : graph_(std::move(graph)), t_(t), trees_(std::move(trees)), adjacency_(std::move(adjacency)) {}

std::size_t DisjointnessGraph::edge_count() const {
  std::size_t twice = 0;
  for (std::size_t v = 0; v < vertex_count(); ++v) twice += adjacency_.row_count(v);
  return twice / 2;
}

LabeledTree DisjointnessGraph::tree(std::size_t vertex) const {
  std::vector<Edge> edges;
  EdgeMask mask = trees_.at(vertex);
  while (mask) {
    edges.push_back(graph_.edges()[std::countr_zero(mask)]);
    mask &= mask - 1;
  }
  return LabeledTree(Forest(graph_.n(), std::move(edges)));
}

std::size_t DisjointnessGraph::shared_edges(std::size_t a, std::size_t b) const {
  return static_cast<std::size_t>(std::popcount(trees_[a] & trees_[b]));
}

DisjointnessGraph build_gamma(const SimpleGraph& g, int t, std::size_t cap, unsigned workers) {
  if (t < 1) throw InvalidInput("Γ_t needs t >= 1");
  if (g.edges().size() > 64) throw InvalidInput("Γ_t construction supports graphs with at most 64 edges");

  std::vector<EdgeMask> masks;
  if (g.is_complete() && g.n() >= 2 && g.n() <= kMaxMaskVertices) {
    // TreeIndex order; the edge positions of K_n coincide with edge_index().
    const std::uint64_t total = tree_count(g.n());
    if (total > cap) throw CapExceeded("graph-build cap", cap, total);
    TreeTable table(g.n(), g.n());
    masks.assign(table.masks().begin(), table.masks().end());
  } else {
    const auto edges = g.edges();
    for_each_spanning_tree(
        g,
        [&](std::span<const Edge> tree) {
          EdgeMask mask = 0;
          for (const Edge& e : tree) {
            auto pos = std::lower_bound(edges.begin(), edges.end(), e) - edges.begin();
            mask |= EdgeMask{1} << pos;
          }
          masks.push_back(mask);
        },
        cap);
  }

  const std::size_t count = masks.size();
  BitMatrix adjacency(count);
  parallel_chunks(count, workers, [&](unsigned, std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      auto row = adjacency.row(i);
      for (std::size_t j = 0; j < count; ++j) {
        if (i != j && std::popcount(masks[i] & masks[j]) < t) row[j / 64] |= std::uint64_t{1} << (j % 64);
      }
    }
  });
  return DisjointnessGraph(g, t, std::move(masks), std::move(adjacency));
}

std::size_t TreeFamily::size() const {
  std::size_t c = 0;
  for (auto w : bits_) c += std::popcount(w);
  return c;
}

std::vector<std::size_t> TreeFamily::members() const {
  std::vector<std::size_t> out;
  for (std::size_t w = 0; w < bits_.size(); ++w) {
    auto word = bits_[w];
    while (word) {
      out.push_back(w * 64 + std::countr_zero(word));
      word &= word - 1;
    }
  }
  return out;
}

namespace {

FamilySearchResult to_family(std::size_t universe, const CliqueResult& clique) {
  FamilySearchResult result{TreeFamily(universe), clique.optimal, clique.nodes};
  for (auto v : clique.vertices) result.family.insert(v);
  return result;
}

}  // namespace

FamilySearchResult max_independent_set(const DisjointnessGraph& gamma, std::uint64_t node_budget) {
  return to_family(gamma.vertex_count(), maximum_clique(gamma.adjacency().complement(), node_budget));
}

FamilySearchResult max_clique(const DisjointnessGraph& gamma, std::uint64_t node_budget) {
  return to_family(gamma.vertex_count(), maximum_clique(gamma.adjacency(), node_budget));
}

bool is_independent(const DisjointnessGraph& gamma, const TreeFamily& family) {
  auto members = family.members();
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = i + 1; j < members.size(); ++j) {
      if (gamma.adjacent(members[i], members[j])) return false;
    }
  }
  return true;
}

bool is_clique(const DisjointnessGraph& gamma, const TreeFamily& family) {
  auto members = family.members();
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = i + 1; j < members.size(); ++j) {
      if (!gamma.adjacent(members[i], members[j])) return false;
    }
  }
  return true;
}

namespace {

constexpr std::array<char, 8> kDumpMagic{'E', 'K', 'R', 'G', 'A', 'M', 'M', 'A'};

template <typename T>
void put_le(std::ostream& out, T value) {
  for (std::size_t i = 0; i < sizeof(T); ++i) out.put(static_cast<char>((value >> (8 * i)) & 0xffu));
}

template <typename T>
T get_le(std::istream& in) {
  T value = 0;
  for (std::size_t i = 0; i < sizeof(T); ++i) {
    int c = in.get();
    if (c == std::istream::traits_type::eof()) throw InvalidInput("truncated Γ dump");
    value |= static_cast<T>(static_cast<unsigned char>(c)) << (8 * i);
  }
  return value;
}

}  // namespace

void write_gamma_dump(const DisjointnessGraph& gamma, std::ostream& out) {
  out.write(kDumpMagic.data(), kDumpMagic.size());
  put_le<std::uint32_t>(out, static_cast<std::uint32_t>(gamma.graph().n()));
  put_le<std::uint32_t>(out, static_cast<std::uint32_t>(gamma.t()));
  put_le<std::uint64_t>(out, gamma.vertex_count());
  for (std::size_t v = 0; v < gamma.vertex_count(); ++v) {
    for (auto word : gamma.adjacency().row(v)) put_le<std::uint64_t>(out, word);
  }
}

GammaDump read_gamma_dump(std::istream& in) {
  std::array<char, 8> magic{};
  in.read(magic.data(), magic.size());
  if (!in || magic != kDumpMagic) throw InvalidInput("not a Γ dump (bad magic)");
  GammaDump dump;
  dump.n = static_cast<int>(get_le<std::uint32_t>(in));
  dump.t = static_cast<int>(get_le<std::uint32_t>(in));
  const auto count = get_le<std::uint64_t>(in);
  dump.adjacency = BitMatrix(count);
  for (std::size_t v = 0; v < count; ++v) {
    for (auto& word : dump.adjacency.row(v)) word = get_le<std::uint64_t>(in);
  }
  return dump;
}

nlohmann::ordered_json gamma_summary(const DisjointnessGraph& gamma, bool full) {
  nlohmann::ordered_json out;
  out["n"] = gamma.graph().n();
  out["graph_edges"] = edges_to_json(gamma.graph().edges());
  out["t"] = gamma.t();
  out["vertex_count"] = gamma.vertex_count();
  out["edge_count"] = gamma.edge_count();
  std::size_t min_degree = gamma.vertex_count() == 0 ? 0 : gamma.vertex_count();
  std::size_t max_degree = 0;
  std::size_t isolated = 0;
  for (std::size_t v = 0; v < gamma.vertex_count(); ++v) {
    auto d = gamma.adjacency().row_count(v);
    min_degree = std::min(min_degree, d);
    max_degree = std::max(max_degree, d);
    isolated += d == 0 ? 1 : 0;
  }
  out["min_degree"] = min_degree;
  out["max_degree"] = max_degree;
  out["isolated_vertices"] = isolated;
  if (full) {
    auto vertices = nlohmann::ordered_json::array();
    for (std::size_t v = 0; v < gamma.vertex_count(); ++v) vertices.push_back(edges_to_json(gamma.tree(v).edges()));
    out["vertices"] = std::move(vertices);
    auto edges = nlohmann::ordered_json::array();
    for (std::size_t a = 0; a < gamma.vertex_count(); ++a) {
      for (std::size_t b = a + 1; b < gamma.vertex_count(); ++b) {
        if (gamma.adjacent(a, b)) edges.push_back({a, b});
      }
    }
    out["edges"] = std::move(edges);
  }
  return out;
}

}  // namespace ekr

#pragma once

// Brute-force reference implementations used to cross-check the library.
// Nothing here goes through Prüfer codes or inclusion-exclusion: trees are
// found by testing every (n-1)-subset of the edges of K_n for connectivity.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <set>
#include <utility>
#include <vector>

namespace oracle {

using Pair = std::pair<int, int>;
using EdgeSet = std::vector<Pair>;

inline std::vector<Pair> all_pairs(int n) {
  std::vector<Pair> out;
  for (int u = 1; u <= n; ++u)
    for (int v = u + 1; v <= n; ++v) out.emplace_back(u, v);
  return out;
}

inline int find(std::vector<int>& parent, int x) {
  while (parent[x] != x) x = parent[x] = parent[parent[x]];
  return x;
}

// Number of components after adding the edges, or -1 if a cycle appears.
inline int acyclic_components(int n, const EdgeSet& edges) {
  std::vector<int> parent(n + 1);
  std::iota(parent.begin(), parent.end(), 0);
  int comps = n;
  for (auto [u, v] : edges) {
    int a = find(parent, u), b = find(parent, v);
    if (a == b) return -1;
    parent[a] = b;
    --comps;
  }
  return comps;
}

inline bool is_forest(int n, const EdgeSet& edges) { return acyclic_components(n, edges) >= 0; }

template <typename Visit>
void subsets_of_size(const std::vector<Pair>& pool, int k, Visit&& visit) {
  EdgeSet current;
  auto rec = [&](auto&& self, std::size_t start) -> void {
    if (static_cast<int>(current.size()) == k) {
      visit(current);
      return;
    }
    for (std::size_t i = start; i < pool.size(); ++i) {
      current.push_back(pool[i]);
      self(self, i + 1);
      current.pop_back();
    }
  };
  rec(rec, 0);
}

inline std::vector<EdgeSet> trees(int n) {
  std::vector<EdgeSet> out;
  if (n == 1) {
    out.emplace_back();
    return out;
  }
  subsets_of_size(all_pairs(n), n - 1, [&](const EdgeSet& s) {
    if (acyclic_components(n, s) == 1) out.push_back(s);
  });
  return out;
}

// Every labelled forest with at most max_edges edges.
inline std::vector<EdgeSet> forests(int n, int max_edges) {
  std::vector<EdgeSet> out;
  const auto pool = all_pairs(n);
  for (int k = 0; k <= max_edges; ++k) {
    subsets_of_size(pool, k, [&](const EdgeSet& s) {
      if (is_forest(n, s)) out.push_back(s);
    });
  }
  return out;
}

inline int shared(const EdgeSet& a, const EdgeSet& b) {
  int c = 0;
  for (const auto& e : a) c += std::count(b.begin(), b.end(), e) ? 1 : 0;
  return c;
}

inline bool contains_all(const EdgeSet& tree, const EdgeSet& f) { return shared(tree, f) == static_cast<int>(f.size()); }

inline std::uint64_t count_containing(const std::vector<EdgeSet>& all, const EdgeSet& f) {
  std::uint64_t c = 0;
  for (const auto& t : all) c += contains_all(t, f) ? 1 : 0;
  return c;
}

inline bool is_star(int n, const EdgeSet& tree) {
  std::vector<int> deg(n + 1, 0);
  for (auto [u, v] : tree) ++deg[u], ++deg[v];
  return *std::max_element(deg.begin(), deg.end()) == n - 1;
}

// Largest clique of a small graph by trying every subset.
inline std::size_t brute_clique(const std::vector<std::vector<bool>>& adj) {
  const std::size_t n = adj.size();
  std::size_t best = 0;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i) {
      if (!(mask >> i & 1u)) continue;
      for (std::size_t j = i + 1; j < n && ok; ++j)
        if ((mask >> j & 1u) && !adj[i][j]) ok = false;
    }
    if (ok) best = std::max<std::size_t>(best, std::popcount(mask));
  }
  return best;
}

}  // namespace oracle

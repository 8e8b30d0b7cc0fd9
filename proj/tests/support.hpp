#pragma once

#include "oracles.hpp"

#include <ekr/treecore.hpp>

#include <vector>

inline oracle::EdgeSet as_pairs(std::span<const ekr::Edge> edges) {
  oracle::EdgeSet out;
  for (const auto& e : edges) out.emplace_back(e.u, e.v);
  return out;
}

inline std::vector<ekr::Edge> as_edges(const oracle::EdgeSet& pairs) {
  std::vector<ekr::Edge> out;
  for (auto [u, v] : pairs) out.emplace_back(u, v);
  return out;
}

inline ekr::Forest forest(int n, std::initializer_list<std::pair<int, int>> pairs) {
  std::vector<ekr::Edge> edges;
  for (auto [u, v] : pairs) edges.emplace_back(u, v);
  return ekr::Forest(n, std::move(edges));
}

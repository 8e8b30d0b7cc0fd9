#include "ekr/counting.hpp"

#include "ekr/detail/union_find.hpp"
#include "ekr/errors.hpp"

#include <algorithm>
#include <string>

namespace ekr {

namespace {

void check_edges(int n, std::span<const Edge> edges) {
  if (n < 2) throw InvalidInput("counting needs n >= 2");
  std::vector<Edge> sorted(edges.begin(), edges.end());
  for (const Edge& e : sorted) {
    if (e.u < 1 || e.v > n || e.u >= e.v) {
      throw InvalidInput("edge {" + std::to_string(e.u) + "," + std::to_string(e.v) + "} not in K_" + std::to_string(n));
    }
  }
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) throw InvalidInput("duplicate edge in edge set");
}

BigCount binomial(int n, int k) {
  BigCount value = 1;
  for (int i = 1; i <= k; ++i) value = value * (n - k + i) / i;
  return value;
}

}  // namespace

BigCount containment_from_product(int n, int edges, const BigCount& product) {
  if (edges > n - 1) return 0;
  // A spanning tree has one component of size n: n * n^{-1} = 1.
  if (edges == n - 1) return product / n;
  return product * ipow(static_cast<std::uint64_t>(n), static_cast<unsigned>(n - 2 - edges));
}

BigCount count_trees_containing(int n, std::span<const Edge> edges) {
  check_edges(n, edges);
  detail::RollbackUnionFind uf(n);
  for (const Edge& e : edges) {
    if (!uf.unite(e.u, e.v)) return 0;
  }
  // Recomputed in big integers: the running 64-bit product overflows past n ~ 120.
  BigCount product = 1;
  for (int x = 1; x <= n; ++x) {
    if (uf.find(x) == x) product *= uf.component_size(x);
  }
  return containment_from_product(n, static_cast<int>(edges.size()), product);
}

BigCount count_matching_family(int n, int l) {
  if (n < 2) throw InvalidInput("counting needs n >= 2");
  if (l < 0 || 2 * l > n) {
    throw InvalidInput("no matching with " + std::to_string(l) + " edges exists on " + std::to_string(n) + " vertices");
  }
  return containment_from_product(n, l, ipow(2, static_cast<unsigned>(l)));
}

LowerBound containment_lower_bound(int n, int t) {
  if (n < 2) throw InvalidInput("counting needs n >= 2");
  if (t < 0 || t > n - 1) throw InvalidInput("t must lie in [0, n-1]");
  if (t == n - 1) return {BigCount(0), true};
  return {ipow(static_cast<std::uint64_t>(n), static_cast<unsigned>(n - 2 - t)), false};
}

std::vector<BigCount> forest_subset_weights(int n, std::span<const Edge> required, std::span<const Edge> optional) {
  if (n > kMaxWeightVertices) {
    throw CapExceeded("inclusion-exclusion vertex cap", kMaxWeightVertices, static_cast<std::uint64_t>(n));
  }
  detail::RollbackUnionFind uf(n);
  for (const Edge& e : required) {
    if (!uf.unite(e.u, e.v)) return {};
  }
  // Products stay below 3^{n/3}, inside 64 bits for n <= 120; the
  // per-size sums are accumulated in 128 bits.
  __extension__ using Wide = unsigned __int128;
  std::vector<Wide> sums(optional.size() + 1, 0);
  const int room = n - 1 - static_cast<int>(required.size());
  int depth = 0;
  auto recurse = [&](auto&& self, std::size_t start) -> void {
    sums[depth] += uf.size_product();
    if (depth == room) return;
    for (std::size_t i = start; i < optional.size(); ++i) {
      if (!uf.unite(optional[i].u, optional[i].v)) continue;
      ++depth;
      self(self, i + 1);
      --depth;
      uf.undo();
    }
  };
  recurse(recurse, 0);

  std::vector<BigCount> weights;
  weights.reserve(sums.size());
  for (Wide s : sums) {
    BigCount value = static_cast<std::uint64_t>(s >> 64);
    value <<= 64;
    value += static_cast<std::uint64_t>(s);
    weights.push_back(value);
  }
  return weights;
}

std::vector<BigCount> count_exactly(int n, std::span<const Edge> s, int ie_cap) {
  check_edges(n, s);
  if (static_cast<int>(s.size()) > ie_cap) {
    throw CapExceeded("inclusion-exclusion cap", static_cast<std::uint64_t>(ie_cap), s.size());
  }
  const int size = static_cast<int>(s.size());
  auto weights = forest_subset_weights(n, {}, s);
  // containing[j] = sum over j-subsets A of s of N(A).
  std::vector<BigCount> containing(size + 1);
  for (int j = 0; j <= size; ++j) containing[j] = containment_from_product(n, j, weights[j]);

  std::vector<BigCount> exactly(size + 1);
  for (int k = 0; k <= size; ++k) {
    BigCount value = 0;
    for (int j = k; j <= size; ++j) {
      BigCount term = binomial(j, k) * containing[j];
      if ((j - k) % 2 == 0) {
        value += term;
      } else {
        value -= term;
      }
    }
    exactly[k] = value;
  }
  return exactly;
}

BigCount count_at_least(int n, std::span<const Edge> s, int m, int ie_cap) {
  auto exactly = count_exactly(n, s, ie_cap);
  BigCount total = 0;
  for (int k = std::max(m, 0); k < static_cast<int>(exactly.size()); ++k) total += exactly[k];
  return total;
}

BigCount verify_by_enumeration(int n, const std::function<bool(const LabeledTree&)>& predicate, int cap) {
  std::uint64_t hits = 0;
  enumerate_trees(
      n, [&](TreeIndex, const LabeledTree& tree) { hits += predicate(tree) ? 1 : 0; }, cap);
  return BigCount(hits);
}

std::uint64_t count_by_masks(const TreeTable& table, EdgeMask required, EdgeMask forbidden) {
  std::uint64_t hits = 0;
  for (EdgeMask m : table.masks()) hits += ((m & required) == required && (m & forbidden) == 0) ? 1 : 0;
  return hits;
}

}  // namespace ekr

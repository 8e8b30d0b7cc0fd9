#include "ekr/treecore.hpp"

#include "ekr/detail/union_find.hpp"
#include "ekr/errors.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <random>
#include <string>

namespace ekr {

Edge::Edge(Vertex a, Vertex b) : u(std::min(a, b)), v(std::max(a, b)) {
  if (a == b) throw InvalidInput("loop edge {" + std::to_string(a) + "," + std::to_string(b) + "}");
}

int edge_index(int n, Edge e) { return (e.u - 1) * (2 * n - e.u) / 2 + (e.v - e.u - 1); }

Edge edge_at(int n, int index) {
  for (int u = 1; u < n; ++u) {
    int row = n - u;
    if (index < row) return Edge(u, u + 1 + index);
    index -= row;
  }
  throw InvalidInput("edge index out of range");
}

EdgeMask to_mask(int n, std::span<const Edge> edges) {
  if (n > kMaxMaskVertices) throw InvalidInput("edge masks need n <= 11");
  EdgeMask mask = 0;
  for (const Edge& e : edges) mask |= EdgeMask{1} << edge_index(n, e);
  return mask;
}

std::vector<Edge> from_mask(int n, EdgeMask mask) {
  std::vector<Edge> edges;
  edges.reserve(std::popcount(mask));
  while (mask) {
    int bit = std::countr_zero(mask);
    edges.push_back(edge_at(n, bit));
    mask &= mask - 1;
  }
  return edges;
}

bool is_acyclic(int n, std::span<const Edge> edges) {
  detail::RollbackUnionFind uf(n);
  for (const Edge& e : edges) {
    if (!uf.unite(e.u, e.v)) return false;
  }
  return true;
}

namespace {

std::string describe(const Edge& e) {
  return "{" + std::to_string(e.u) + "," + std::to_string(e.v) + "}";
}

// Empty string when valid, otherwise the reason.
std::string validate_forest(int n, std::vector<Edge>& edges) {
  if (n < 1) return "vertex count must be positive";
  for (const Edge& e : edges) {
    if (e.u < 1 || e.v > n || e.u >= e.v) return "edge " + describe(e) + " outside [1," + std::to_string(n) + "]";
  }
  std::sort(edges.begin(), edges.end());
  if (auto dup = std::adjacent_find(edges.begin(), edges.end()); dup != edges.end()) {
    return "duplicate edge " + describe(*dup);
  }
  if (!is_acyclic(n, edges)) return "edge set contains a cycle";
  return {};
}

}  // namespace

Forest::Forest(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
  if (auto error = validate_forest(n_, edges_); !error.empty()) throw InvalidInput(error);
}

std::optional<Forest> Forest::try_make(int n, std::vector<Edge> edges) {
  if (!validate_forest(n, edges).empty()) return std::nullopt;
  Forest f(n);
  f.edges_ = std::move(edges);
  return f;
}

bool Forest::contains(Edge e) const { return std::binary_search(edges_.begin(), edges_.end(), e); }

std::vector<int> Forest::degrees() const {
  std::vector<int> deg(n_ + 1, 0);
  for (const Edge& e : edges_) {
    ++deg[e.u];
    ++deg[e.v];
  }
  return deg;
}

LabeledTree::LabeledTree(Forest forest) : forest_(std::move(forest)) {
  if (!forest_.is_spanning_tree()) {
    throw InvalidInput("not a spanning tree: " + std::to_string(forest_.size()) + " edges on " +
                       std::to_string(forest_.n()) + " vertices");
  }
}

PruferCode prufer_encode(const LabeledTree& tree) {
  const int n = tree.n();
  if (n < 2) throw InvalidInput("Prüfer codes need n >= 2");
  PruferCode result{n, {}};
  if (n == 2) return result;

  std::vector<std::vector<Vertex>> adjacency(n + 1);
  for (const Edge& e : tree.edges()) {
    adjacency[e.u].push_back(e.v);
    adjacency[e.v].push_back(e.u);
  }
  // Root at n; n is never deleted by the smallest-leaf rule.
  std::vector<Vertex> parent(n + 1, 0);
  std::vector<Vertex> stack{n};
  parent[n] = -1;
  while (!stack.empty()) {
    Vertex x = stack.back();
    stack.pop_back();
    for (Vertex y : adjacency[x]) {
      if (y != parent[x]) {
        parent[y] = x;
        stack.push_back(y);
      }
    }
  }

  std::vector<int> degree(n + 1);
  for (Vertex x = 1; x <= n; ++x) degree[x] = static_cast<int>(adjacency[x].size());
  Vertex ptr = 1;
  while (degree[ptr] != 1) ++ptr;
  Vertex leaf = ptr;
  result.code.reserve(n - 2);
  for (int i = 0; i < n - 2; ++i) {
    Vertex next = parent[leaf];
    result.code.push_back(next);
    if (--degree[next] == 1 && next < ptr) {
      leaf = next;
    } else {
      do {
        ++ptr;
      } while (degree[ptr] != 1);
      leaf = ptr;
    }
  }
  return result;
}

namespace {

void check_code(const PruferCode& code) {
  if (code.n < 2) throw InvalidInput("Prüfer codes need n >= 2");
  if (code.code.size() != static_cast<std::size_t>(code.n - 2)) {
    throw InvalidInput("Prüfer code for n=" + std::to_string(code.n) + " must have length " +
                       std::to_string(code.n - 2));
  }
  for (Vertex x : code.code) {
    if (x < 1 || x > code.n) throw InvalidInput("Prüfer label " + std::to_string(x) + " out of range");
  }
}

// Calls emit(a, b) for each of the n - 1 edges.
template <typename Emit>
void decode_edges(int n, std::span<const Vertex> code, std::vector<int>& degree, Emit&& emit) {
  degree.assign(n + 1, 1);
  for (Vertex x : code) ++degree[x];
  Vertex ptr = 1;
  while (degree[ptr] != 1) ++ptr;
  Vertex leaf = ptr;
  for (Vertex next : code) {
    emit(leaf, next);
    if (--degree[next] == 1 && next < ptr) {
      leaf = next;
    } else {
      do {
        ++ptr;
      } while (degree[ptr] != 1);
      leaf = ptr;
    }
  }
  emit(leaf, n);
}

}  // namespace

LabeledTree prufer_decode(const PruferCode& code) {
  check_code(code);
  std::vector<Edge> edges;
  edges.reserve(code.n - 1);
  std::vector<int> degree;
  decode_edges(code.n, code.code, degree, [&](Vertex a, Vertex b) { edges.emplace_back(a, b); });
  return LabeledTree(Forest(code.n, std::move(edges)));
}

EdgeMask decode_to_mask(int n, std::span<const Vertex> code) {
  EdgeMask mask = 0;
  std::vector<int> degree;
  decode_edges(n, code, degree, [&](Vertex a, Vertex b) { mask |= EdgeMask{1} << edge_index(n, Edge(a, b)); });
  return mask;
}

std::uint64_t tree_count(int n) {
  if (n < 2 || n > kMaxIndexVertices) throw InvalidInput("tree_count needs 2 <= n <= 17");
  std::uint64_t count = 1;
  for (int i = 0; i < n - 2; ++i) count *= static_cast<std::uint64_t>(n);
  return count;
}

TreeIndex tree_index(const PruferCode& code) {
  check_code(code);
  if (code.n > kMaxIndexVertices) throw InvalidInput("TreeIndex needs n <= 17");
  std::uint64_t value = 0;
  for (Vertex x : code.code) value = value * code.n + static_cast<std::uint64_t>(x - 1);
  return TreeIndex{value};
}

PruferCode code_at(int n, TreeIndex index) {
  if (index.value >= tree_count(n)) throw InvalidInput("TreeIndex out of range");
  PruferCode code{n, std::vector<Vertex>(n - 2)};
  std::uint64_t value = index.value;
  for (int i = n - 3; i >= 0; --i) {
    code.code[i] = static_cast<Vertex>(value % n) + 1;
    value /= n;
  }
  return code;
}

namespace {

void advance(std::vector<Vertex>& code, int n) {
  for (int i = static_cast<int>(code.size()) - 1; i >= 0; --i) {
    if (code[i] < n) {
      ++code[i];
      return;
    }
    code[i] = 1;
  }
}

}  // namespace

void enumerate_tree_range(int n, std::uint64_t first, std::uint64_t last,
                          const std::function<void(TreeIndex, const LabeledTree&)>& visit) {
  last = std::min(last, tree_count(n));
  if (first >= last) return;
  PruferCode code = code_at(n, TreeIndex{first});
  for (std::uint64_t i = first; i < last; ++i) {
    visit(TreeIndex{i}, prufer_decode(code));
    advance(code.code, n);
  }
}

void enumerate_trees(int n, const std::function<void(TreeIndex, const LabeledTree&)>& visit, int cap) {
  if (n < 2) throw InvalidInput("enumeration needs n >= 2");
  if (n > cap) throw CapExceeded("enumeration cap", static_cast<std::uint64_t>(cap), static_cast<std::uint64_t>(n));
  enumerate_tree_range(n, 0, tree_count(n), visit);
}

TreeTable::TreeTable(int n, int cap) : n_(n) {
  if (n < 2) throw InvalidInput("enumeration needs n >= 2");
  if (n > cap) throw CapExceeded("enumeration cap", static_cast<std::uint64_t>(cap), static_cast<std::uint64_t>(n));
  if (n > kMaxMaskVertices) throw InvalidInput("TreeTable needs n <= 11");
  const std::uint64_t total = tree_count(n);
  masks_.reserve(total);
  std::vector<Vertex> code(n - 2, 1);
  std::vector<int> degree;
  for (std::uint64_t i = 0; i < total; ++i) {
    EdgeMask mask = 0;
    decode_edges(n, code, degree, [&](Vertex a, Vertex b) { mask |= EdgeMask{1} << edge_index(n, Edge(a, b)); });
    masks_.push_back(mask);
    advance(code, n);
  }
}

LabeledTree TreeTable::tree(std::size_t index) const {
  return LabeledTree(Forest(n_, from_mask(n_, masks_.at(index))));
}

std::vector<int> Components::sizes() const {
  std::vector<int> out;
  out.reserve(parts.size());
  for (const auto& part : parts) out.push_back(static_cast<int>(part.size()));
  return out;
}

Components components(const Forest& forest) {
  const int n = forest.n();
  detail::RollbackUnionFind uf(n);
  for (const Edge& e : forest.edges()) uf.unite(e.u, e.v);
  std::vector<int> slot(n + 1, -1);
  Components result;
  for (Vertex x = 1; x <= n; ++x) {
    if (uf.component_size(x) == 1) {
      result.isolated.push_back(x);
      continue;
    }
    int root = uf.find(x);
    if (slot[root] < 0) {
      slot[root] = static_cast<int>(result.parts.size());
      result.parts.emplace_back();
    }
    result.parts[slot[root]].push_back(x);
  }
  return result;
}

std::size_t intersection_size(const Forest& a, const Forest& b) {
  std::size_t shared = 0;
  auto ia = a.edges().begin();
  auto ib = b.edges().begin();
  while (ia != a.edges().end() && ib != b.edges().end()) {
    if (*ia < *ib) {
      ++ia;
    } else if (*ib < *ia) {
      ++ib;
    } else {
      ++shared;
      ++ia;
      ++ib;
    }
  }
  return shared;
}

bool is_star(const LabeledTree& tree) {
  auto deg = tree.forest().degrees();
  return std::any_of(deg.begin() + 1, deg.end(), [&](int d) { return d == tree.n() - 1; });
}

int line_graph_max_degree(const Forest& forest) {
  auto deg = forest.degrees();
  int best = -1;
  for (const Edge& e : forest.edges()) best = std::max(best, deg[e.u] + deg[e.v] - 2);
  return best;
}

std::optional<Edge> star_like_witness(const Forest& forest, const Rational& d) {
  if (d <= 0) throw InvalidInput("star-likeness parameter d must be positive");
  auto deg = forest.degrees();
  for (const Edge& e : forest.edges()) {
    // meets >= (n-1)/d others  <=>  meets * d >= n - 1
    if (Rational(deg[e.u] + deg[e.v] - 2) * d >= Rational(forest.n() - 1)) return e;
  }
  return std::nullopt;
}

bool is_d_star_like(const Forest& forest, const Rational& d) { return star_like_witness(forest, d).has_value(); }

LabeledTree sample_uniform_tree(int n, std::uint64_t seed) {
  if (n < 2) throw InvalidInput("sampling needs n >= 2");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> label(1, n);
  PruferCode code{n, std::vector<Vertex>(n - 2)};
  for (auto& x : code.code) x = label(rng);
  return prufer_decode(code);
}

void for_each_forest(int n, int max_edges, const std::function<void(std::span<const Edge>)>& visit) {
  const int total = edge_count(n);
  std::vector<Edge> all;
  all.reserve(total);
  for (int i = 0; i < total; ++i) all.push_back(edge_at(n, i));
  max_edges = std::min(max_edges, n - 1);

  detail::RollbackUnionFind uf(n);
  std::vector<Edge> current;
  auto recurse = [&](auto&& self, int start) -> void {
    visit(current);
    if (static_cast<int>(current.size()) == max_edges) return;
    for (int i = start; i < total; ++i) {
      if (!uf.unite(all[i].u, all[i].v)) continue;
      current.push_back(all[i]);
      self(self, i + 1);
      current.pop_back();
      uf.undo();
    }
  };
  recurse(recurse, 0);
}

LabeledTree make_star(int n, Vertex center) {
  std::vector<Edge> edges;
  for (Vertex x = 1; x <= n; ++x) {
    if (x != center) edges.emplace_back(center, x);
  }
  return LabeledTree(Forest(n, std::move(edges)));
}

LabeledTree make_path(int n) {
  std::vector<Edge> edges;
  for (Vertex x = 1; x < n; ++x) edges.emplace_back(x, x + 1);
  return LabeledTree(Forest(n, std::move(edges)));
}

Forest make_matching(int n, int edges) {
  if (2 * edges > n) throw InvalidInput("a matching with " + std::to_string(edges) + " edges needs n >= " + std::to_string(2 * edges));
  std::vector<Edge> out;
  for (int i = 0; i < edges; ++i) out.emplace_back(2 * i + 1, 2 * i + 2);
  return Forest(n, std::move(out));
}

Rational parse_rational(std::string_view text) {
  auto parse_int = [&](std::string_view part) {
    if (part.empty()) throw InvalidInput("malformed rational '" + std::string(text) + "'");
    bool negative = part.front() == '-';
    if (negative || part.front() == '+') part.remove_prefix(1);
    if (part.empty() || !std::all_of(part.begin(), part.end(), [](char c) { return c >= '0' && c <= '9'; })) {
      throw InvalidInput("malformed rational '" + std::string(text) + "'");
    }
    BigCount value{std::string(part)};
    return negative ? BigCount(-value) : value;
  };
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    BigCount den = parse_int(text.substr(slash + 1));
    if (den == 0) throw InvalidInput("zero denominator in '" + std::string(text) + "'");
    return Rational(parse_int(text.substr(0, slash)), den);
  }
  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    std::string_view whole = text.substr(0, dot);
    std::string_view frac = text.substr(dot + 1);
    bool negative = !whole.empty() && whole.front() == '-';
    BigCount w = (whole.empty() || whole == "-" || whole == "+") ? BigCount(0) : parse_int(whole);
    BigCount f = frac.empty() ? BigCount(0) : parse_int(frac);
    BigCount scale = boost::multiprecision::pow(BigCount(10), static_cast<unsigned>(frac.size()));
    BigCount magnitude = (w < 0 ? BigCount(-w) : w) * scale + f;
    return Rational(negative ? BigCount(-magnitude) : magnitude, scale);
  }
  return Rational(parse_int(text));
}

std::string to_string(const Rational& value) {
  auto num = boost::multiprecision::numerator(value);
  auto den = boost::multiprecision::denominator(value);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

}  // namespace ekr

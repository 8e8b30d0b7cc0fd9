#include "ekr/extremal.hpp"

#include "ekr/detail/union_find.hpp"
#include "ekr/errors.hpp"
#include "ekr/parallel.hpp"
#include "ekr/tree_io.hpp"

#include <algorithm>
#include <bit>
#include <string>

namespace ekr {

ComponentShape parse_component_shape(std::string_view name) {
  if (name == "path") return ComponentShape::path;
  if (name == "star") return ComponentShape::star;
  if (name == "caterpillar") return ComponentShape::caterpillar;
  throw InvalidInput("unknown component shape '" + std::string(name) + "' (path, star, caterpillar)");
}

std::string_view to_string(ComponentShape shape) {
  switch (shape) {
    case ComponentShape::path: return "path";
    case ComponentShape::star: return "star";
    case ComponentShape::caterpillar: return "caterpillar";
  }
  return "path";
}

FamilySpec FamilySpec::trivial(const Forest& f) {
  FamilySpec spec;
  spec.kind = Kind::trivial;
  spec.n = f.n();
  spec.t = static_cast<int>(f.size());
  spec.edges.assign(f.edges().begin(), f.edges().end());
  return spec;
}

FamilySpec FamilySpec::stars_plus_edge(int n, Edge e) {
  if (n < 3) throw InvalidInput("stars-plus-edge needs n >= 3");
  if (e.v > n) throw InvalidInput("fixed edge outside K_n");
  FamilySpec spec;
  spec.kind = Kind::stars_plus_edge;
  spec.n = n;
  spec.t = 1;
  spec.edges = {e};
  return spec;
}

FamilySpec FamilySpec::at_least(int n, int t, std::vector<Edge> edges, int threshold) {
  FamilySpec spec;
  spec.kind = Kind::threshold;
  spec.n = n;
  spec.t = t;
  spec.edges = std::move(edges);
  std::sort(spec.edges.begin(), spec.edges.end());
  spec.threshold = threshold;
  return spec;
}

namespace {

std::size_t shared_with(const FamilySpec& spec, const LabeledTree& tree) {
  std::size_t shared = 0;
  for (const Edge& e : spec.edges) shared += tree.forest().contains(e) ? 1 : 0;
  return shared;
}

}  // namespace

bool is_member(const FamilySpec& spec, const LabeledTree& tree) {
  switch (spec.kind) {
    case FamilySpec::Kind::trivial: return shared_with(spec, tree) == spec.edges.size();
    case FamilySpec::Kind::stars_plus_edge: return is_star(tree) || shared_with(spec, tree) == 1;
    case FamilySpec::Kind::threshold: return static_cast<int>(shared_with(spec, tree)) >= spec.threshold;
    case FamilySpec::Kind::explicit_list:
      return std::find(spec.members.begin(), spec.members.end(), tree) != spec.members.end();
  }
  return false;
}

BigCount family_size(const FamilySpec& spec) {
  switch (spec.kind) {
    case FamilySpec::Kind::trivial: return count_trees_containing(spec.n, spec.edges);
    case FamilySpec::Kind::stars_plus_edge: return stars_plus_edge_size(spec.n);
    case FamilySpec::Kind::threshold: return count_at_least(spec.n, spec.edges, spec.threshold);
    case FamilySpec::Kind::explicit_list: {
      auto members = spec.members;
      std::sort(members.begin(), members.end());
      return BigCount(std::unique(members.begin(), members.end()) - members.begin());
    }
  }
  return 0;
}

std::vector<std::size_t> realize_family(const FamilySpec& spec, const TreeTable& table) {
  if (table.n() != spec.n) throw InvalidInput("tree table and family disagree on n");
  const int n = spec.n;
  std::vector<std::size_t> out;
  if (spec.kind == FamilySpec::Kind::explicit_list) {
    for (const auto& tree : spec.members) out.push_back(tree_index(prufer_encode(tree)).value);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }
  const EdgeMask edges = to_mask(n, spec.edges);
  EdgeMask stars[kMaxMaskVertices + 1] = {};
  for (Vertex c = 1; c <= n && spec.kind == FamilySpec::Kind::stars_plus_edge; ++c) {
    stars[c] = to_mask(n, make_star(n, c).edges());
  }
  for (std::size_t i = 0; i < table.size(); ++i) {
    const EdgeMask m = table.mask(i);
    bool member = false;
    switch (spec.kind) {
      case FamilySpec::Kind::trivial: member = (m & edges) == edges; break;
      case FamilySpec::Kind::threshold: member = std::popcount(m & edges) >= spec.threshold; break;
      case FamilySpec::Kind::stars_plus_edge:
        member = (m & edges) == edges || std::any_of(stars + 1, stars + n + 1, [&](EdgeMask s) { return s == m; });
        break;
      case FamilySpec::Kind::explicit_list: break;
    }
    if (member) out.push_back(i);
  }
  return out;
}

bool is_pairwise_t_intersecting(const TreeTable& table, std::span<const std::size_t> members, int t) {
  for (std::size_t a = 0; a < members.size(); ++a) {
    for (std::size_t b = a + 1; b < members.size(); ++b) {
      if (std::popcount(table.mask(members[a]) & table.mask(members[b])) < t) return false;
    }
  }
  return true;
}

namespace {

constexpr std::string_view kind_name(FamilySpec::Kind kind) {
  switch (kind) {
    case FamilySpec::Kind::trivial: return "trivial";
    case FamilySpec::Kind::stars_plus_edge: return "stars_plus_edge";
    case FamilySpec::Kind::threshold: return "threshold";
    case FamilySpec::Kind::explicit_list: return "explicit";
  }
  return "trivial";
}

}  // namespace

nlohmann::ordered_json to_json(const FamilySpec& spec) {
  nlohmann::ordered_json out;
  out["kind"] = kind_name(spec.kind);
  out["n"] = spec.n;
  out["t"] = spec.t;
  out["edges"] = edges_to_json(spec.edges);
  if (spec.kind == FamilySpec::Kind::threshold) out["threshold"] = spec.threshold;
  if (spec.kind == FamilySpec::Kind::explicit_list) {
    auto members = nlohmann::ordered_json::array();
    for (const auto& tree : spec.members) members.push_back(edges_to_json(tree.edges()));
    out["members"] = std::move(members);
  }
  return out;
}

FamilySpec family_spec_from_json(const nlohmann::ordered_json& value) {
  try {
    FamilySpec spec;
    const auto kind = value.at("kind").get<std::string>();
    spec.n = value.at("n").get<int>();
    spec.t = value.at("t").get<int>();
    spec.edges = edges_from_json(value.at("edges"));
    std::sort(spec.edges.begin(), spec.edges.end());
    if (kind == "trivial") {
      spec.kind = FamilySpec::Kind::trivial;
    } else if (kind == "stars_plus_edge") {
      spec.kind = FamilySpec::Kind::stars_plus_edge;
      if (spec.edges.size() != 1) throw InvalidInput("stars_plus_edge needs exactly one edge");
    } else if (kind == "threshold") {
      spec.kind = FamilySpec::Kind::threshold;
      spec.threshold = value.at("threshold").get<int>();
    } else if (kind == "explicit") {
      spec.kind = FamilySpec::Kind::explicit_list;
      for (const auto& member : value.at("members")) spec.members.emplace_back(spec.n, edges_from_json(member));
    } else {
      throw InvalidInput("unknown family kind '" + kind + "'");
    }
    return spec;
  } catch (const nlohmann::ordered_json::exception& e) {
    throw InvalidInput(std::string("malformed family JSON: ") + e.what());
  }
}

BigCount trivial_family_size(int n, const Forest& f) {
  if (f.n() != n) throw InvalidInput("forest and n disagree");
  return count_trees_containing(f);
}

BigCount stars_plus_edge_size(int n) {
  if (n < 3) throw InvalidInput("stars-plus-edge needs n >= 3");
  return 2 * ipow(static_cast<std::uint64_t>(n), static_cast<unsigned>(n - 3)) + (n - 2);
}

namespace {

void add_component(std::vector<Edge>& edges, Vertex first, int size, ComponentShape shape) {
  if (size < 2) return;
  switch (shape) {
    case ComponentShape::path:
      for (int i = 0; i + 1 < size; ++i) edges.emplace_back(first + i, first + i + 1);
      break;
    case ComponentShape::star:
      for (int i = 1; i < size; ++i) edges.emplace_back(first, first + i);
      break;
    case ComponentShape::caterpillar: {
      // Spine on the first ceil(size/2) labels; remaining labels hang off the
      // spine round-robin.
      const int spine = (size + 1) / 2;
      for (int i = 0; i + 1 < spine; ++i) edges.emplace_back(first + i, first + i + 1);
      for (int i = spine; i < size; ++i) edges.emplace_back(first + (i - spine) % spine, first + i);
      break;
    }
  }
}

}  // namespace

Forest balanced_forest(int n, int l, ComponentShape shape) {
  if (n < 1 || l < 0 || l > n - 1) throw InvalidInput("balanced forest needs 0 <= l <= n - 1");
  const int parts = n - l;
  const int small = n / parts;
  const int large_count = n % parts;
  std::vector<Edge> edges;
  Vertex next = 1;
  for (int c = 0; c < parts; ++c) {
    const int size = c < large_count ? small + 1 : small;
    add_component(edges, next, size, shape);
    next += size;
  }
  return Forest(n, std::move(edges));
}

BigCount family_F_ntj_size(int n, int t, int j, ComponentShape shape, int ie_cap) {
  if (t < 1 || j < 0 || t + 2 * j > n - 1) throw InvalidInput("F_{n,t,j} needs t >= 1, j >= 0, t + 2j <= n - 1");
  const Forest f = balanced_forest(n, t + 2 * j, shape);
  return count_at_least(n, f.edges(), t + j, ie_cap);
}

Forest three_path_forest(int n, int t) {
  if (t < 0 || t % 2 != 0) throw InvalidInput("three-path forest needs even t");
  const int paths = t / 2 + 1;
  if (3 * paths > n) throw InvalidInput("three-path forest needs n >= 3(t+2)/2");
  std::vector<Edge> edges;
  for (int p = 0; p < paths; ++p) {
    edges.emplace_back(3 * p + 1, 3 * p + 2);
    edges.emplace_back(3 * p + 2, 3 * p + 3);
  }
  return Forest(n, std::move(edges));
}

BigCount example_quadratic(int n, int t) {
  BigCount big_n = n;
  return big_n * big_n - BigCount(4 + 2 * t) * big_n + BigCount(3 * t + 3);
}

ExampleComparison example_closed_form(int n, int t) {
  if (t < 2 || t % 2 != 0) throw InvalidInput("the three-path construction needs even t >= 2");
  if (2 * n < 3 * (t + 2) || n >= 2 * t) throw InvalidInput("the three-path construction needs 3(t+2)/2 <= n < 2t");
  ExampleComparison out;
  out.n = n;
  out.t = t;
  const BigCount threes = ipow(3, static_cast<unsigned>(t / 2));
  out.closed_form = threes * ipow(static_cast<std::uint64_t>(n), static_cast<unsigned>(n - t - 4)) *
                    BigCount(2 * n * t + 4 * n - 3 * t - 3);
  out.baseline = threes * ipow(static_cast<std::uint64_t>(n), static_cast<unsigned>(n - 2 - t));
  out.quadratic = example_quadratic(n, t);
  out.second_larger = out.quadratic < 0;
  return out;
}

ScanResult conjecture_scan(int n, int t, int j_max, ComponentShape shape, int ie_cap) {
  if (t < 1 || j_max < 0 || t + 2 * j_max > n - 1) throw InvalidInput("scan needs t >= 1 and t + 2 j_max <= n - 1");
  ScanResult out;
  out.n = n;
  out.t = t;
  for (int j = 0; j <= j_max; ++j) out.rows.push_back({j, family_F_ntj_size(n, t, j, shape, ie_cap)});
  for (const auto& row : out.rows) {
    if (row.size > out.rows[out.best_j].size) out.best_j = row.j;
  }
  if (2 * t <= n) out.trivial_wins = out.rows.front().size == out.rows[out.best_j].size;
  return out;
}

namespace {

std::vector<Edge> edges_outside(const Forest& t0, const Forest& f) {
  std::vector<Edge> out;
  for (const Edge& e : t0.edges()) {
    if (!f.contains(e)) out.push_back(e);
  }
  return out;
}

void check_pair(int n, const Forest& t0, const Forest& f) {
  if (t0.n() != n || f.n() != n) throw InvalidInput("t0, f and n disagree on the vertex count");
}

}  // namespace

BigCount count_avoiding(int n, const Forest& t0, const Forest& f, int ie_cap) {
  check_pair(n, t0, f);
  const auto outside = edges_outside(t0, f);
  if (static_cast<int>(outside.size()) > ie_cap) {
    throw CapExceeded("inclusion-exclusion cap", static_cast<std::uint64_t>(ie_cap), outside.size());
  }
  const auto weights = forest_subset_weights(n, f.edges(), outside);
  BigCount total = 0;
  for (std::size_t j = 0; j < weights.size(); ++j) {
    BigCount term = containment_from_product(n, static_cast<int>(f.size() + j), weights[j]);
    if (j % 2 == 0) {
      total += term;
    } else {
      total -= term;
    }
  }
  return total;
}

BigCount count_avoiding_by_enumeration(int n, const Forest& t0, const Forest& f, int cap) {
  check_pair(n, t0, f);
  const TreeTable table(n, cap);
  return BigCount(count_by_masks(table, to_mask(n, f.edges()), to_mask(n, edges_outside(t0, f))));
}

namespace {

// Signed 64-bit inclusion-exclusion for n <= kMaxBlockedVertices, where every
// term is below n^{n-2}.
class SmallAvoidCounter {
 public:
  explicit SmallAvoidCounter(int n) : n_(n), powers_(n, 1) {
    for (int k = 1; k < n; ++k) powers_[k] = powers_[k - 1] * n;
  }

  std::int64_t count(std::span<const Edge> f, std::span<const Edge> outside) const {
    detail::RollbackUnionFind uf(n_);
    for (const Edge& e : f) uf.unite(e.u, e.v);
    std::int64_t total = 0;
    int size = static_cast<int>(f.size());
    int sign = 1;
    auto recurse = [&](auto&& self, std::size_t start) -> void {
      const auto product = static_cast<std::int64_t>(uf.size_product());
      total += sign * (size == n_ - 1 ? product / n_ : product * powers_[n_ - 2 - size]);
      if (size == n_ - 1) return;
      for (std::size_t i = start; i < outside.size(); ++i) {
        if (!uf.unite(outside[i].u, outside[i].v)) continue;
        ++size;
        sign = -sign;
        self(self, i + 1);
        sign = -sign;
        --size;
        uf.undo();
      }
    };
    recurse(recurse, 0);
    return total;
  }

 private:
  int n_;
  std::vector<std::int64_t> powers_;
};

// Lexicographic order of equal-size edge lists given as masks: the list that
// owns the lowest differing edge is smaller.
bool mask_lex_less(EdgeMask a, EdgeMask b) {
  const EdgeMask diff = a ^ b;
  return diff != 0 && (a & (diff & -diff)) != 0;
}

struct BlockedCandidate {
  std::int64_t value = -1;
  std::size_t forest = 0;
  EdgeMask tree = 0;
  std::uint64_t pairs = 0;

  bool better_than(const BlockedCandidate& other) const {
    if (other.value < 0) return value >= 0;
    if (value != other.value) return value < other.value;
    if (forest != other.forest) return forest < other.forest;
    return mask_lex_less(tree, other.tree);
  }
};

}  // namespace

BlockedReport blocked_Dt(int n, int t, unsigned workers) {
  if (n < 4) throw InvalidInput("D_t needs n >= 4 (smaller n have no non-star trees)");
  if (n > kMaxBlockedVertices) {
    throw CapExceeded("D_t exhaustion cap", kMaxBlockedVertices, static_cast<std::uint64_t>(n));
  }
  if (t < 1 || t >= n - 1) throw InvalidInput("D_t needs 1 <= t <= n - 2");

  const TreeTable table(n, kMaxBlockedVertices);
  std::vector<EdgeMask> stars;
  for (Vertex c = 1; c <= n; ++c) stars.push_back(to_mask(n, make_star(n, c).edges()));
  std::vector<EdgeMask> candidates;
  for (EdgeMask m : table.masks()) {
    if (std::find(stars.begin(), stars.end(), m) == stars.end()) candidates.push_back(m);
  }
  std::vector<std::vector<Edge>> forests;
  for_each_forest(n, t, [&](std::span<const Edge> f) {
    if (static_cast<int>(f.size()) == t) forests.emplace_back(f.begin(), f.end());
  });

  const SmallAvoidCounter counter(n);
  workers = std::max(1u, workers);
  std::vector<BlockedCandidate> best(workers);
  parallel_chunks(forests.size(), workers, [&](unsigned chunk, std::size_t begin, std::size_t end) {
    BlockedCandidate local;
    std::vector<Edge> outside;
    for (std::size_t fi = begin; fi < end; ++fi) {
      const EdgeMask fmask = to_mask(n, forests[fi]);
      for (EdgeMask tree : candidates) {
        if (std::popcount(tree & fmask) >= t) continue;
        ++local.pairs;
        outside = from_mask(n, tree & ~fmask);
        BlockedCandidate current{counter.count(forests[fi], outside), fi, tree, 0};
        if (current.better_than(local)) {
          current.pairs = local.pairs;
          local = current;
        }
      }
    }
    best[chunk] = local;
  });

  BlockedCandidate winner;
  std::uint64_t pairs = 0;
  for (const auto& candidate : best) {
    pairs += candidate.pairs;
    if (candidate.better_than(winner)) winner = candidate;
  }

  BlockedReport report;
  report.n = n;
  report.t = t;
  report.pairs = pairs;
  if (winner.value >= 0) {
    report.value = winner.value;
    report.forest = Forest(n, forests[winner.forest]);
    report.tree = LabeledTree(Forest(n, from_mask(n, winner.tree)));
  }
  const int exponent = n - 2 * t - 17;
  report.proposition_bound = exponent >= 0 ? Rational(ipow(n, exponent))
                                           : Rational(BigCount(1), ipow(n, static_cast<unsigned>(-exponent)));
  report.proposition_hypothesis = n >= 2 * t + 110;
  return report;
}

nlohmann::ordered_json to_json(const BlockedReport& report) {
  nlohmann::ordered_json out;
  out["n"] = report.n;
  out["t"] = report.t;
  out["value"] = to_decimal(report.value);
  out["forest"] = edges_to_json(report.forest.edges());
  out["tree"] = report.tree ? edges_to_json(report.tree->edges()) : nlohmann::ordered_json(nullptr);
  out["pairs"] = report.pairs;
  out["proposition_bound"] = to_string(report.proposition_bound);
  out["proposition_hypothesis"] = report.proposition_hypothesis;
  return out;
}

MaxFamilyResult brute_force_max_t_intersecting(int n, int t, std::uint64_t node_budget) {
  if (n < 2 || n > kMaxBruteForceVertices) {
    throw CapExceeded("brute-force search cap", kMaxBruteForceVertices, static_cast<std::uint64_t>(n));
  }
  if (t < 1 || t > n - 1) throw InvalidInput("t must lie in [1, n-1]");
  const auto gamma = build_gamma(SimpleGraph::complete(n), t);
  const auto search = max_independent_set(gamma, node_budget);

  MaxFamilyResult out;
  out.n = n;
  out.t = t;
  out.members = search.family.members();
  out.optimal = search.optimal;
  out.nodes = search.nodes;
  const TreeTable table(n, kMaxBruteForceVertices);
  out.verified = is_pairwise_t_intersecting(table, out.members, t);
  if (2 * t <= n) out.trivial_size = count_matching_family(n, t);
  if (t == 1 && n >= 3) out.stars_plus_edge_size = stars_plus_edge_size(n);
  return out;
}

}  // namespace ekr

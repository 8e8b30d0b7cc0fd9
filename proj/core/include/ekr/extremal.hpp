#pragma once

#include "ekr/counting.hpp"
#include "ekr/gammagraph.hpp"
#include "ekr/numeric.hpp"
#include "ekr/treecore.hpp"

#include <nlohmann/json.hpp>

#include <optional>
#include <string_view>
#include <vector>

namespace ekr {

// Shape used for each component of a balanced forest.
enum class ComponentShape { path, star, caterpillar };

ComponentShape parse_component_shape(std::string_view name);
std::string_view to_string(ComponentShape shape);

// A family of trees of K_n that is claimed to be t-intersecting.
struct FamilySpec {
  enum class Kind { trivial, stars_plus_edge, threshold, explicit_list };

  Kind kind = Kind::trivial;
  int n = 0;
  int t = 0;
  std::vector<Edge> edges;  // F for trivial/threshold, the fixed edge for stars_plus_edge
  int threshold = 0;        // threshold: members contain at least this many edges of F
  std::vector<LabeledTree> members;  // explicit_list

  static FamilySpec trivial(const Forest& f);
  static FamilySpec stars_plus_edge(int n, Edge e);
  static FamilySpec at_least(int n, int t, std::vector<Edge> edges, int threshold);
};

bool is_member(const FamilySpec& spec, const LabeledTree& tree);
// Exact size: closed forms where available, inclusion-exclusion for threshold
// families, the list length for explicit ones.
BigCount family_size(const FamilySpec& spec);
// Members as TreeIndex values (ascending), by scanning the table.
std::vector<std::size_t> realize_family(const FamilySpec& spec, const TreeTable& table);
bool is_pairwise_t_intersecting(const TreeTable& table, std::span<const std::size_t> members, int t);

nlohmann::ordered_json to_json(const FamilySpec& spec);
FamilySpec family_spec_from_json(const nlohmann::ordered_json& value);

// |T_n[F]| for a forest with t = |F| edges; 2^t n^{n-t-2} when F is a matching.
BigCount trivial_family_size(int n, const Forest& f);

// 2 n^{n-3} + (n - 2): all trees through one fixed edge plus the n - 2 stars
// not already containing it. Requires n >= 3.
BigCount stars_plus_edge_size(int n);

// Spanning forest with l edges whose n - l components differ in size by at
// most one: larger components first, each on a consecutive block of labels.
Forest balanced_forest(int n, int l, ComponentShape shape = ComponentShape::path);

// Trees containing at least t + j of the t + 2j edges of balanced_forest(n, t + 2j).
BigCount family_F_ntj_size(int n, int t, int j, ComponentShape shape = ComponentShape::path,
                           int ie_cap = kDefaultIeCap);

// t/2 + 1 disjoint 3-vertex paths on labels 1..3(t/2 + 1).
Forest three_path_forest(int n, int t);

struct ExampleComparison {
  int n = 0;
  int t = 0;
  BigCount closed_form;  // 3^{t/2} n^{n-t-4} (2nt + 4n - 3t - 3)
  BigCount baseline;     // 3^{t/2} n^{n-2-t}
  BigCount quadratic;    // n^2 - (4 + 2t) n + 3t + 3 (signed)
  bool second_larger = false;  // quadratic < 0
};

// n^2 - (4 + 2t) n + 3t + 3, for any n and t.
BigCount example_quadratic(int n, int t);

// Requires t even and 3(t + 2)/2 <= n < 2t.
ExampleComparison example_closed_form(int n, int t);

struct ScanRow {
  int j = 0;
  BigCount size;
};

struct ScanResult {
  int n = 0;
  int t = 0;
  std::vector<ScanRow> rows;
  int best_j = 0;                    // lowest j attaining the maximum
  std::optional<bool> trivial_wins;  // set when t <= n/2: does j = 0 attain the maximum?
};

ScanResult conjecture_scan(int n, int t, int j_max, ComponentShape shape = ComponentShape::path,
                           int ie_cap = kDefaultIeCap);

// |T_n[t0; f]|: trees containing f and no edge of t0 outside f, by
// inclusion-exclusion over the edges of t0 \ f.
BigCount count_avoiding(int n, const Forest& t0, const Forest& f, int ie_cap = kDefaultIeCap);
// Same quantity by scanning every tree.
BigCount count_avoiding_by_enumeration(int n, const Forest& t0, const Forest& f, int cap = kDefaultEnumerationCap);

inline constexpr int kMaxBlockedVertices = 7;

struct BlockedReport {
  int n = 0;
  int t = 0;
  BigCount value;
  Forest forest;  // argmin F
  std::optional<LabeledTree> tree;  // argmin T_0
  std::uint64_t pairs = 0;          // admissible (F, T_0) pairs examined
  Rational proposition_bound;       // n^{n-2t-17}
  bool proposition_hypothesis = false;  // n >= 2t + 110
};

// D_t by exhaustive double minimization over t-edge forests F and non-star
// trees T_0 with |T_0 ∩ F| < t. Ties go to the lexicographically smallest
// (F, T_0) edge lists. Requires 1 <= t <= n - 2 and n <= kMaxBlockedVertices.
BlockedReport blocked_Dt(int n, int t, unsigned workers = 1);

nlohmann::ordered_json to_json(const BlockedReport& report);

struct LlllVerdict {
  bool holds = true;
  std::optional<std::size_t> failing_event;  // first i violating the condition
  Rational lower_bound = 1;                  // prod (1 - x_i)
};

// Pr[A_i] <= x_i prod_{ij in E} (1 - x_j) for every i. Requires p_i in [0,1]
// and x_i in [0,1); dependency edges index into p/x.
LlllVerdict llll_condition_check(std::span<const Rational> p, std::span<const Rational> x,
                                 std::span<const std::pair<std::size_t, std::size_t>> dependency);

// Pairs of edge positions in the forest that share an endpoint.
std::vector<std::pair<std::size_t, std::size_t>> line_graph_edges(const Forest& forest);

struct NotstarVerdict {
  int n = 0;
  BigCount avoiding;          // |T_n[t0; ∅]|
  Rational rational_bound;    // (1 - 4/n)^{n-1} n^{n-2}
  bool passes_rational = false;
  Rational llll_bound;        // (1 - 4/n)^{|t0|} n^{n-2}
  bool passes_llll = false;
  std::string e4_bound;       // e^{-4} n^{n-2}, 30 significant digits
  bool passes_e4 = false;
  bool llll_hypothesis = false;  // p = 2/n, x = 4/n on the line graph of t0
};

// Throws InvalidInput if n < 5 or t0 is 6-star-like (the message names the edge).
NotstarVerdict lemma_notstar_check(int n, const Forest& t0);

struct MaxFamilyResult {
  int n = 0;
  int t = 0;
  std::vector<std::size_t> members;  // TreeIndex values
  bool optimal = false;
  bool verified = false;  // pairwise t-intersecting, rechecked
  std::uint64_t nodes = 0;
  std::optional<BigCount> trivial_size;          // 2^t n^{n-t-2} when 2t <= n
  std::optional<BigCount> stars_plus_edge_size;  // t = 1
};

inline constexpr int kMaxBruteForceVertices = 6;

// Maximum t-intersecting family of K_n trees as a maximum independent set of Γ_t(K_n).
MaxFamilyResult brute_force_max_t_intersecting(int n, int t, std::uint64_t node_budget = kDefaultNodeBudget);

}  // namespace ekr

#pragma once

#include "ekr/numeric.hpp"
#include "ekr/treecore.hpp"

#include <functional>
#include <span>
#include <vector>

namespace ekr {

inline constexpr int kDefaultIeCap = 24;
// Component-size products must fit in 64 bits during inclusion-exclusion.
inline constexpr int kMaxWeightVertices = 120;

// Number of spanning trees of K_n containing every edge in `edges`:
// q_1 q_2 ... q_m n^{n-2-sum(q_i - 1)} over the component sizes q_i.
// An edge set with a cycle is contained in no tree and yields 0.
BigCount count_trees_containing(int n, std::span<const Edge> edges);
inline BigCount count_trees_containing(const Forest& forest) {
  return count_trees_containing(forest.n(), forest.edges());
}

// 2^l n^{n-2-l}; throws InvalidInput for l > n/2.
BigCount count_matching_family(int n, int l);

struct LowerBound {
  BigCount value;        // n^{n-t-2}, or 0 when vacuous
  bool vacuous = false;  // t = n - 1: the bound 1/n is below one tree
};

LowerBound containment_lower_bound(int n, int t);

// Inclusion-exclusion building block. For every subset A of `optional` such
// that required ∪ A is acyclic, adds the product of the component sizes of
// required ∪ A into weights[|A|]. Acyclicity is pruned during the subset DFS,
// so every superset of a cyclic subset is skipped. Returns an empty vector when
// `required` itself has a cycle.
std::vector<BigCount> forest_subset_weights(int n, std::span<const Edge> required,
                                            std::span<const Edge> optional);

// Turns a component-size product for a forest with `edges` edges into the
// number of trees containing it.
BigCount containment_from_product(int n, int edges, const BigCount& product);

// exactly[k] = number of trees containing exactly k edges of s, k = 0..|s|.
// Throws CapExceeded when |s| > ie_cap.
std::vector<BigCount> count_exactly(int n, std::span<const Edge> s, int ie_cap = kDefaultIeCap);

// Trees containing at least m edges of s.
BigCount count_at_least(int n, std::span<const Edge> s, int m, int ie_cap = kDefaultIeCap);

// Independent oracle: streams every labelled tree on [n] and counts those
// satisfying the predicate.
BigCount verify_by_enumeration(int n, const std::function<bool(const LabeledTree&)>& predicate,
                               int cap = kDefaultEnumerationCap);

// Mask-level oracle over a prebuilt table: trees containing all of `required`
// and none of `forbidden`.
std::uint64_t count_by_masks(const TreeTable& table, EdgeMask required, EdgeMask forbidden = 0);

}  // namespace ekr

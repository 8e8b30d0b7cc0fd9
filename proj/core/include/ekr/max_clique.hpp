#pragma once

#include "ekr/bit_matrix.hpp"

#include <cstdint>
#include <vector>

namespace ekr {

struct CliqueResult {
  std::vector<std::size_t> vertices;  // ascending
  bool optimal = false;               // search finished within the node budget
  std::uint64_t nodes = 0;
};

// Exact maximum clique by branch and bound: degeneracy vertex ordering,
// greedy-coloring upper bounds on bit-packed candidate sets. The budget counts
// search nodes, so results do not depend on wall-clock time. Fully
// deterministic for a given matrix.
CliqueResult maximum_clique(const BitMatrix& adjacency, std::uint64_t node_budget);

}  // namespace ekr

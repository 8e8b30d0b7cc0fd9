#pragma once

#include "ekr/numeric.hpp"
#include "ekr/treecore.hpp"

#include <nlohmann/json.hpp>

#include <cstdint>
#include <optional>
#include <utility>

namespace ekr {

// Forest iteration is exhaustive; beyond this the number of forests explodes.
inline constexpr int kMaxSpreadVertices = 9;

struct SpreadWitness {
  Forest base;      // T (empty for plain r-spread)
  Forest extended;  // U, with T ⊆ U
};

struct SpreadReport {
  int n = 0;
  Rational r;
  int t = 0;  // largest |T| considered; 0 for plain r-spread
  int edge_budget = 0;
  bool verified = true;
  std::uint64_t checked = 0;  // inequalities evaluated
  std::optional<SpreadWitness> witness;
};

// Checks |T_n(X)| <= r^{-|X|} n^{n-2} for every forest X with |X| <= edge_budget.
// Non-forest X have |T_n(X)| = 0 and are skipped. The first violation in
// lexicographic forest order is reported.
SpreadReport verify_r_spread(int n, const Rational& r, int edge_budget);

// Checks |T_n(U)| <= r^{-(|U|-|T|)} |T_n(T)| for all forests T ⊆ U with
// |T| <= t and |U| <= edge_budget.
SpreadReport verify_rt_spread(int n, const Rational& r, int t, int edge_budget);

// Recomputes the witness inequality from closed-form counts; true when the
// witness really violates it.
bool witness_violates(const SpreadReport& report);

nlohmann::ordered_json to_json(const SpreadReport& report);

}  // namespace ekr

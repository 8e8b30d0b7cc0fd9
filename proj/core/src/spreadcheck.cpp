#include "ekr/spreadcheck.hpp"

#include "ekr/counting.hpp"
#include "ekr/errors.hpp"
#include "ekr/tree_io.hpp"

#include <bit>
#include <vector>

namespace ekr {

namespace {

void check_arguments(int n, const Rational& r, int t, int edge_budget) {
  if (n < 2) throw InvalidInput("spread checks need n >= 2");
  if (n > kMaxSpreadVertices) {
    throw CapExceeded("spread forest-iteration cap", kMaxSpreadVertices, static_cast<std::uint64_t>(n));
  }
  if (r <= 0) throw InvalidInput("spread ratio r must be positive");
  if (t < 0 || edge_budget < 0) throw InvalidInput("t and edge budget must be nonnegative");
}

// count(U) * p^d <= q^d * count(T), with r = p/q and d = |U| - |T|.
bool holds(const BigCount& count_u, const BigCount& count_t, const Rational& r, unsigned d) {
  BigCount p = boost::multiprecision::numerator(r);
  BigCount q = boost::multiprecision::denominator(r);
  return count_u * boost::multiprecision::pow(p, d) <= boost::multiprecision::pow(q, d) * count_t;
}

}  // namespace

SpreadReport verify_rt_spread(int n, const Rational& r, int t, int edge_budget) {
  check_arguments(n, r, t, edge_budget);
  SpreadReport report;
  report.n = n;
  report.r = r;
  report.t = t;
  report.edge_budget = edge_budget;

  std::vector<Edge> subset;
  for_each_forest(n, edge_budget, [&](std::span<const Edge> u) {
    if (!report.verified) return;
    const BigCount count_u = count_trees_containing(n, u);
    const std::size_t size = u.size();
    for (std::uint32_t bits = 0; bits < (1u << size); ++bits) {
      const int base_size = std::popcount(bits);
      if (base_size > t) continue;
      subset.clear();
      for (std::size_t i = 0; i < size; ++i) {
        if (bits & (1u << i)) subset.push_back(u[i]);
      }
      ++report.checked;
      if (!holds(count_u, count_trees_containing(n, subset), r, static_cast<unsigned>(size - base_size))) {
        report.verified = false;
        report.witness = SpreadWitness{Forest(n, subset), Forest(n, {u.begin(), u.end()})};
        return;
      }
    }
  });
  return report;
}

SpreadReport verify_r_spread(int n, const Rational& r, int edge_budget) {
  return verify_rt_spread(n, r, 0, edge_budget);
}

bool witness_violates(const SpreadReport& report) {
  if (!report.witness) return false;
  const auto& w = *report.witness;
  if (intersection_size(w.base, w.extended) != w.base.size()) return false;
  const unsigned d = static_cast<unsigned>(w.extended.size() - w.base.size());
  return !holds(count_trees_containing(w.extended), count_trees_containing(w.base), report.r, d);
}

nlohmann::ordered_json to_json(const SpreadReport& report) {
  nlohmann::ordered_json out;
  out["n"] = report.n;
  out["r"] = to_string(report.r);
  out["t"] = report.t;
  out["edge_budget"] = report.edge_budget;
  out["verified"] = report.verified;
  out["checked"] = report.checked;
  if (report.witness) {
    out["witness"] = {{"T", edges_to_json(report.witness->base.edges())},
                      {"U", edges_to_json(report.witness->extended.edges())},
                      {"count_T", to_decimal(count_trees_containing(report.witness->base))},
                      {"count_U", to_decimal(count_trees_containing(report.witness->extended))}};
  } else {
    out["witness"] = nullptr;
  }
  return out;
}

}  // namespace ekr

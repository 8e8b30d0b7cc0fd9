#include "ekr/errors.hpp"
#include "ekr/extremal.hpp"

#include <boost/multiprecision/cpp_dec_float.hpp>

#include <string>

namespace ekr {

namespace {

Rational rational_pow(const Rational& base, int exponent) {
  Rational out = 1;
  for (int i = 0; i < exponent; ++i) out *= base;
  return out;
}

}  // namespace

LlllVerdict llll_condition_check(std::span<const Rational> p, std::span<const Rational> x,
                                 std::span<const std::pair<std::size_t, std::size_t>> dependency) {
  if (p.size() != x.size()) throw InvalidInput("probability and weight vectors differ in length");
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] < 0 || p[i] > 1) throw InvalidInput("p_" + std::to_string(i) + " outside [0,1]");
    if (x[i] < 0 || x[i] >= 1) throw InvalidInput("x_" + std::to_string(i) + " outside [0,1)");
  }
  std::vector<Rational> rhs(x.begin(), x.end());
  for (auto [a, b] : dependency) {
    if (a >= p.size() || b >= p.size() || a == b) throw InvalidInput("bad dependency edge");
    rhs[a] *= 1 - x[b];
    rhs[b] *= 1 - x[a];
  }
  LlllVerdict verdict;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] > rhs[i] && !verdict.failing_event) {
      verdict.holds = false;
      verdict.failing_event = i;
    }
    verdict.lower_bound *= 1 - x[i];
  }
  return verdict;
}

std::vector<std::pair<std::size_t, std::size_t>> line_graph_edges(const Forest& forest) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  const auto edges = forest.edges();
  for (std::size_t a = 0; a < edges.size(); ++a) {
    for (std::size_t b = a + 1; b < edges.size(); ++b) {
      const Edge& e = edges[a];
      const Edge& f = edges[b];
      if (e.u == f.u || e.u == f.v || e.v == f.u || e.v == f.v) out.emplace_back(a, b);
    }
  }
  return out;
}

NotstarVerdict lemma_notstar_check(int n, const Forest& t0) {
  if (n < 5) throw InvalidInput("the avoidance bound needs n >= 5");
  if (t0.n() != n) throw InvalidInput("t0 and n disagree on the vertex count");
  if (auto edge = star_like_witness(t0, Rational(6))) {
    throw InvalidInput("forest is 6-star-like: edge {" + std::to_string(edge->u) + "," + std::to_string(edge->v) +
                       "} meets " + std::to_string(line_graph_max_degree(t0)) + " other edges");
  }
  NotstarVerdict out;
  out.n = n;
  out.avoiding = count_avoiding(n, t0, Forest(n));
  const BigCount total = ipow(static_cast<std::uint64_t>(n), static_cast<unsigned>(n - 2));
  const Rational keep = Rational(n - 4, n);
  out.rational_bound = rational_pow(keep, n - 1) * total;
  out.passes_rational = Rational(out.avoiding) >= out.rational_bound;
  out.llll_bound = rational_pow(keep, static_cast<int>(t0.size())) * total;
  out.passes_llll = Rational(out.avoiding) >= out.llll_bound;

  using Decimal = boost::multiprecision::cpp_dec_float_50;
  const Decimal e4 = boost::multiprecision::exp(Decimal(-4)) * Decimal(total.str());
  out.e4_bound = e4.str(30);
  out.passes_e4 = Decimal(out.avoiding.str()) >= e4;

  const std::vector<Rational> p(t0.size(), Rational(2, n));
  const std::vector<Rational> x(t0.size(), Rational(4, n));
  const auto dependency = line_graph_edges(t0);
  out.llll_hypothesis = llll_condition_check(p, x, dependency).holds;
  return out;
}

}  // namespace ekr

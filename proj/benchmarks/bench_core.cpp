#include <ekr/counting.hpp>
#include <ekr/extremal.hpp>
#include <ekr/gammagraph.hpp>
#include <ekr/spreadcheck.hpp>
#include <ekr/treecore.hpp>

#include <benchmark/benchmark.h>

using namespace ekr;

static void BM_EnumerateTrees(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    std::uint64_t edges = 0;
    enumerate_trees(n, [&](TreeIndex, const LabeledTree& t) { edges += t.edges().size(); });
    benchmark::DoNotOptimize(edges);
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(tree_count(n)));
}
BENCHMARK(BM_EnumerateTrees)->DenseRange(5, 8);

static void BM_TreeTable(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(TreeTable(n).size());
}
BENCHMARK(BM_TreeTable)->DenseRange(6, 8);

static void BM_PruferRoundTrip(benchmark::State& state) {
  const auto tree = sample_uniform_tree(static_cast<int>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(prufer_decode(prufer_encode(tree)));
}
BENCHMARK(BM_PruferRoundTrip)->Arg(16)->Arg(256)->Arg(4096);

static void BM_CountContaining(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto f = balanced_forest(n, n / 2);
  for (auto _ : state) benchmark::DoNotOptimize(count_trees_containing(f));
}
BENCHMARK(BM_CountContaining)->Arg(20)->Arg(200);

static void BM_CountAtLeast(benchmark::State& state) {
  const int edges = static_cast<int>(state.range(0));
  const auto f = balanced_forest(40, edges);
  for (auto _ : state) benchmark::DoNotOptimize(count_at_least(40, f.edges(), edges / 2));
}
BENCHMARK(BM_CountAtLeast)->Arg(8)->Arg(14)->Arg(20);

static void BM_ThreePathExample(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(count_at_least(21, three_path_forest(21, 12).edges(), 13));
}
BENCHMARK(BM_ThreePathExample);

static void BM_SpreadCheck(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(verify_rt_spread(n, Rational(n, 2), n - 1, n - 1).verified);
}
BENCHMARK(BM_SpreadCheck)->DenseRange(5, 7)->Unit(benchmark::kMillisecond);

static void BM_BuildGamma(benchmark::State& state) {
  const auto g = SimpleGraph::complete(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(build_gamma(g, 1).edge_count());
}
BENCHMARK(BM_BuildGamma)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);

static void BM_MaxIndependentSet(benchmark::State& state) {
  const auto gamma = build_gamma(SimpleGraph::complete(5), static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(max_independent_set(gamma).family.size());
}
BENCHMARK(BM_MaxIndependentSet)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

static void BM_PackingNumber(benchmark::State& state) {
  const auto g = SimpleGraph::complete(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(packing_number(g).value);
}
BENCHMARK(BM_PackingNumber)->DenseRange(6, 9)->Unit(benchmark::kMillisecond);

static void BM_BlockedDt(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(blocked_Dt(7, static_cast<int>(state.range(0))).value);
}
BENCHMARK(BM_BlockedDt)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();

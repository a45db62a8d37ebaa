#include <benchmark/benchmark.h>

#include "indseq/clustering.hpp"
#include "indseq/indpoly.hpp"
#include "indseq/pair_product.hpp"
#include "indseq/param_lc.hpp"
#include "indseq/scans.hpp"

using namespace indseq;

static void BM_TreeDp(benchmark::State& state) {
  const Graph t = random_tree(static_cast<int>(state.range(0)), 11);
  for (auto _ : state) benchmark::DoNotOptimize(indpoly_tree_dp(t));
}
BENCHMARK(BM_TreeDp)->Arg(100)->Arg(1000)->Arg(5000);

static void BM_Deletion(benchmark::State& state) {
  const Graph g = random_graph(static_cast<int>(state.range(0)), 0.2, 12);
  for (auto _ : state) benchmark::DoNotOptimize(indpoly_deletion(g));
}
BENCHMARK(BM_Deletion)->Arg(20)->Arg(30)->Arg(40);

static void BM_BruteForce(benchmark::State& state) {
  const Graph g = random_graph(static_cast<int>(state.range(0)), 0.2, 13);
  for (auto _ : state) benchmark::DoNotOptimize(indpoly_bruteforce(g));
}
BENCHMARK(BM_BruteForce)->Arg(16)->Arg(20);

static void BM_FqUnitInterval(benchmark::State& state) {
  const ParamPoly f = marked_path_fq(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(fq_lc_plus_on_unit_interval(f));
}
BENCHMARK(BM_FqUnitInterval)->Arg(10)->Arg(50)->Arg(200);

static void BM_PairBox(benchmark::State& state) {
  const ParamPoly f = marked_path_fq(5);
  for (auto _ : state) benchmark::DoNotOptimize(pair_product_lc_box(f, unit_interval(), unit_interval()));
}
BENCHMARK(BM_PairBox);

static void BM_ClusterCertificate(benchmark::State& state) {
  const MarkedPolys m = double_star_polys(0, 1);
  for (auto _ : state) benchmark::DoNotOptimize(cluster_certify_family(m, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_ClusterCertificate)->Arg(10)->Arg(40);

static void BM_ConcatSequence(benchmark::State& state) {
  const MarkedPolys m = marked_path_polys(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(concat_sequence(m, 40));
}
BENCHMARK(BM_ConcatSequence)->Arg(20)->Arg(100)->Unit(benchmark::kMillisecond);

static void BM_Multiply(benchmark::State& state) {
  // Sizes on both sides of the Kronecker threshold.
  const IntPoly a = one_plus_x_pow(static_cast<unsigned>(state.range(0)));
  const IntPoly b = a * a + IntPoly{3, -1};
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_Multiply)->Arg(16)->Arg(64)->Arg(512)->Arg(2048);

static void BM_TreeCorpus(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(tree_corpus(static_cast<int>(state.range(0))));
}
BENCHMARK(BM_TreeCorpus)->Arg(8)->Arg(10)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();

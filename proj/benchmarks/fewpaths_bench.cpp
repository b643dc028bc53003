#include <benchmark/benchmark.h>

#include "fewpaths/counting.hpp"
#include "fewpaths/generators.hpp"
#include "fewpaths/path_count.hpp"
#include "fewpaths/random_walk.hpp"
#include "fewpaths/recognizer.hpp"
#include "fewpaths/savitch.hpp"
#include "fewpaths/spectral.hpp"
#include "fewpaths/svd.hpp"

using namespace fewpaths;

namespace {

void BM_SvdRandomDag(benchmark::State &state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto l = counting_laplacian(gen_random_dag(n, 0.1, 7));
  for (auto _ : state)
    benchmark::DoNotOptimize(svd(l));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_SvdRandomDag)->RangeMultiplier(2)->Range(8, 128)->Complexity(benchmark::oNCubed);

void BM_SvdDiamond(benchmark::State &state) {
  const auto l = counting_laplacian(gen_diamond_chain(static_cast<std::size_t>(state.range(0))));
  for (auto _ : state)
    benchmark::DoNotOptimize(svd(l));
}
BENCHMARK(BM_SvdDiamond)->DenseRange(5, 25, 5);

void BM_OracleAllPairs(benchmark::State &state) {
  const auto g = gen_random_dag(static_cast<std::size_t>(state.range(0)), 0.2, 11);
  const BigInt cap = BigInt(1) << 128;
  for (auto _ : state)
    benchmark::DoNotOptimize(count_paths_oracle(g, cap));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_OracleAllPairs)->RangeMultiplier(2)->Range(16, 256)->Complexity();

void BM_StronglyFewCount(benchmark::State &state) {
  const auto half = static_cast<std::size_t>(state.range(0));
  const auto g = gen_chain_figure1(half);
  for (auto _ : state)
    benchmark::DoNotOptimize(
        count_paths_strongly_few(g, 0, 2 * half - 1, 1, NoiseModel::exact()));
}
BENCHMARK(BM_StronglyFewCount)->RangeMultiplier(2)->Range(4, 32);

void BM_Recognizer(benchmark::State &state) {
  const auto half = static_cast<std::size_t>(state.range(0));
  const auto g = gen_chain_figure1(half);
  for (auto _ : state)
    benchmark::DoNotOptimize(recognize_stcon_sf(g, 0, 2 * half - 1, 1, NoiseModel::exact()));
  state.counters["n_lay"] = static_cast<double>(2 * half * (2 * half + 1));
}
BENCHMARK(BM_Recognizer)->DenseRange(2, 8, 2)->Unit(benchmark::kMillisecond);

void BM_RecognizerDecideOnly(benchmark::State &state) {
  const auto half = static_cast<std::size_t>(state.range(0));
  const StconRecognizer rec(gen_chain_figure1(half));
  std::uint64_t seed = 0;
  for (auto _ : state)
    benchmark::DoNotOptimize(
        rec.decide(0, 2 * half - 1, 1, NoiseModel::uniform(1.0 / 3.0, 1.0 / 6.0, ++seed)));
}
BENCHMARK(BM_RecognizerDecideOnly)->DenseRange(2, 8, 2);

void BM_Savitch(benchmark::State &state) {
  const auto half = static_cast<std::size_t>(state.range(0));
  const auto g = gen_chain_figure1(half);
  for (auto _ : state)
    benchmark::DoNotOptimize(savitch_reachable(g, 0, 2 * half - 1));
}
BENCHMARK(BM_Savitch)->DenseRange(2, 6, 2);

void BM_RandomWalk(benchmark::State &state) {
  const auto g = gen_chain_figure1(10);
  for (auto _ : state)
    benchmark::DoNotOptimize(random_walk_hit_probability(g, 0, 19, 20, 10'000, 3));
  state.SetItemsProcessed(state.iterations() * 10'000);
}
BENCHMARK(BM_RandomWalk);

} // namespace
BENCHMARK_MAIN();

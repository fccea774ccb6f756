#include <benchmark/benchmark.h>

#include "conmod/corpus.hpp"

namespace {

using namespace conmod;

const DvrSpec kZ5 = DvrSpec::zlocal(5);

void BM_ValidateGorNotCI(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(gor_not_ci_algebra(kZ5));
}
BENCHMARK(BM_ValidateGorNotCI)->Unit(benchmark::kMillisecond);

void BM_MultiplicityGlue(benchmark::State& state) {
  const auto a = glue_algebra(kZ5, state.range(0));
  const auto m = regular_module(a);
  for (auto _ : state) benchmark::DoNotOptimize(multiplicity(m));
}
BENCHMARK(BM_MultiplicityGlue)->DenseRange(1, 4)->Unit(benchmark::kMillisecond);

void BM_MultiplicityGorNotCI(benchmark::State& state) {
  const auto m = regular_module(gor_not_ci_algebra(kZ5));
  for (auto _ : state) benchmark::DoNotOptimize(multiplicity(m));
}
BENCHMARK(BM_MultiplicityGorNotCI)->Unit(benchmark::kMillisecond);

void BM_WilesDefectRandomModule(benchmark::State& state) {
  const auto a = gor_not_ci_algebra(kZ5);
  const auto m = random_module(a, 5, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(wiles_defect(m));
}
BENCHMARK(BM_WilesDefectRandomModule)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

void BM_PrediamondVersusOracle(benchmark::State& state) {
  const auto a = glue_algebra(kZ5, 2);
  const auto m = random_module(a, 11, 3, true);
  const bool use_oracle = state.range(0) != 0;
  for (auto _ : state) {
    if (use_oracle)
      benchmark::DoNotOptimize(direct_freeness_oracle(m));
    else
      benchmark::DoNotOptimize(freeness_prediamond(m));
  }
}
BENCHMARK(BM_PrediamondVersusOracle)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_VenkateshGorNotCI(benchmark::State& state) {
  const auto pres = gor_not_ci_presentation(kZ5);
  for (auto _ : state) benchmark::DoNotOptimize(venkatesh_check(pres));
}
BENCHMARK(BM_VenkateshGorNotCI)->Unit(benchmark::kMillisecond);

}  // namespace

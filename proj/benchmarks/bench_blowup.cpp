#include <benchmark/benchmark.h>

#include "sudoku_spectra/sudoku_spectra.hpp"

using namespace sudoku_spectra;

namespace {

const Tiling& reference() {
  static const Tiling t =
      tiling_from_cell_sets(4, {{1, 2, 3, 4}, {5, 9, 13, 14}, {6, 8, 12, 16}, {7, 10, 11, 15}});
  return t;
}

void BM_BlownAdjacency(benchmark::State& state) {
  const auto k = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(blown_adjacency(reference(), k));
}
BENCHMARK(BM_BlownAdjacency)->DenseRange(2, 5)->Unit(benchmark::kMillisecond);

void BM_Reconcile(benchmark::State& state) {
  const auto k = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(reconcile(reference(), k));
}
BENCHMARK(BM_Reconcile)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

void BM_BlownCharPoly(benchmark::State& state) {
  const IntMatrix up = blown_adjacency(classical_tiling(2), static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(char_poly(up));
  state.SetLabel(std::to_string(up.rows()) + " vertices");
}
BENCHMARK(BM_BlownCharPoly)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_Analyze(benchmark::State& state) {
  const auto k = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(analyze(reference(), k));
}
BENCHMARK(BM_Analyze)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

}  // namespace

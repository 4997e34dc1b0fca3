#include <benchmark/benchmark.h>

#include "sudoku_spectra/sudoku_spectra.hpp"

using namespace sudoku_spectra;

namespace {

// Sudoku-like inputs at the sizes the tools meet: m = 4, 6, 9.
Tiling tiling_for(std::int64_t m) {
  if (m == 9) return classical_tiling(3);
  return random_tiling(static_cast<std::size_t>(m), 7);
}

void BM_CharPoly(benchmark::State& state) {
  const IntMatrix a = adjacency(tiling_for(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(char_poly(a));
  state.SetLabel(std::to_string(a.rows()) + " vertices");
}
BENCHMARK(BM_CharPoly)->Arg(4)->Arg(6)->Arg(9)->Unit(benchmark::kMillisecond);

void BM_ExactSpectrum(benchmark::State& state) {
  const IntMatrix a = adjacency(tiling_for(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(exact_spectrum(a));
}
BENCHMARK(BM_ExactSpectrum)->Arg(4)->Arg(6)->Arg(9)->Unit(benchmark::kMillisecond);

void BM_FloatEigen(benchmark::State& state) {
  const IntMatrix a = adjacency(tiling_for(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(float_eigen(a));
}
BENCHMARK(BM_FloatEigen)->Arg(4)->Arg(6)->Arg(9)->Unit(benchmark::kMillisecond);

void BM_Rank(benchmark::State& state) {
  const IntMatrix a = adjacency(tiling_for(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(rank(a));
}
BENCHMARK(BM_Rank)->Arg(4)->Arg(9)->Unit(benchmark::kMillisecond);

}  // namespace

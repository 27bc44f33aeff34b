// Serial reference kernels against their OpenMP versions.

#include <benchmark/benchmark.h>

#include "diskcx/bbm.hpp"
#include "diskcx/gamma.hpp"
#include "diskcx/kernels.hpp"

using namespace diskcx;
using kernels::Exec;

namespace {

std::vector<CyclicWord> sample_words(int g, int budget) {
  std::vector<CyclicWord> out;
  for (const auto& v : sample_gamma(ChainSurface::standard(g), budget).vertices) out.push_back(v.curve.word());
  return out;
}

void BM_intersection_table(benchmark::State& st) {
  const auto s = ChainSurface::standard(2);
  static const auto words = sample_words(2, 6);
  const auto exec = st.range(0) ? Exec::parallel : Exec::serial;
  for (auto _ : st) benchmark::DoNotOptimize(kernels::intersection_table(s, words, exec));
  st.SetLabel(std::to_string(words.size()) + " curves");
}

void BM_classify(benchmark::State& st) {
  const auto s = ChainSurface::standard(3);
  std::vector<CyclicWord> words;
  for (const auto& v : bbm_vertices(s)) words.push_back(v.x.curve.word());
  for (const auto& w : sample_words(3, 3)) words.push_back(w);
  const auto exec = st.range(0) ? Exec::parallel : Exec::serial;
  for (auto _ : st) benchmark::DoNotOptimize(kernels::classify_candidates(s, words, exec));
}

void BM_boundary_matrix(benchmark::State& st) {
  static const auto x = build_X(ChainSurface::standard(4));
  const auto faces = x.complex.faces();
  const auto exec = st.range(0) ? Exec::parallel : Exec::serial;
  for (auto _ : st) benchmark::DoNotOptimize(kernels::boundary_matrix(faces[4], faces[3], exec));
}

}  // namespace

// Argument 0 is the serial reference, 1 the parallel kernel.
BENCHMARK(BM_intersection_table)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_classify)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_boundary_matrix)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();

#include <string>

#include <benchmark/benchmark.h>

#include "symcone/cone.hpp"
#include "symcone/random.hpp"
#include "symcone/spectral.hpp"

namespace {

using symcone::ConeStructure;

const char* const kSpecs[] = {"no16", "soc16", "psd8", "fig2-right"};

symcone::StructurePtr structure_at(int i) {
  const std::string spec = kSpecs[i];
  return spec.rfind("fig", 0) == 0 ? ConeStructure::preset(spec)
                                   : ConeStructure::parse(spec);
}

void BM_SpectralDecompose(benchmark::State& state) {
  const auto s = structure_at(static_cast<int>(state.range(0)));
  symcone::Rng rng(1);
  const symcone::AlgebraElement x = symcone::random_bounded_loss(s, rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(symcone::spectral_decompose(x));
  }
  state.SetLabel(kSpecs[state.range(0)]);
}
BENCHMARK(BM_SpectralDecompose)->DenseRange(0, 3);

void BM_NormalizedExp(benchmark::State& state) {
  const auto s = structure_at(static_cast<int>(state.range(0)));
  symcone::Rng rng(2);
  const symcone::AlgebraElement x = 20.0 * symcone::random_bounded_loss(s, rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(symcone::normalized_exp(x));
  }
  state.SetLabel(kSpecs[state.range(0)]);
}
BENCHMARK(BM_NormalizedExp)->DenseRange(0, 3);

}  // namespace

#include <benchmark/benchmark.h>

#include "symcone/games.hpp"
#include "symcone/random.hpp"

namespace {

void BM_SvmGameRun(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  const std::int64_t horizon = state.range(1);
  symcone::Rng rng(5);
  const symcone::SvmInstance inst = symcone::generate_svm_instance(1000, d, 0.1, rng);
  symcone::SvmGameOptions options;
  options.record_running_metrics = false;
  for (auto _ : state) {
    benchmark::DoNotOptimize(symcone::svm_game_run(inst, horizon, options));
  }
}
BENCHMARK(BM_SvmGameRun)->Args({2, 100})->Args({10, 100})->Args({10, 1000})
    ->Unit(benchmark::kMillisecond);

}  // namespace

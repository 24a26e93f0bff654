#include <benchmark/benchmark.h>

#include <vector>

#include "dini/grid_eval.hpp"
#include "dini/suite.hpp"
#include "dini/zeros.hpp"

namespace {

dini::Execution mode(const benchmark::State& state) {
  return state.range(0) == 0 ? dini::Execution::serial : dini::Execution::parallel;
}

void BM_RunAll(benchmark::State& state) {
  const auto profile = state.range(1) == 0 ? dini::Profile::quick : dini::Profile::full;
  for (auto _ : state) {
    state.PauseTiming();
    dini::clear_zero_cache();
    state.ResumeTiming();
    const dini::Report r = dini::run_all(profile, mode(state));
    benchmark::DoNotOptimize(r.all_pass);
  }
  state.SetLabel(state.range(0) == 0 ? "serial" : "parallel");
}
BENCHMARK(BM_RunAll)->ArgsProduct({{0, 1}, {0, 1}})->Unit(benchmark::kMillisecond);

void BM_EvaluateGrid(benchmark::State& state) {
  std::vector<double> xs(static_cast<std::size_t>(state.range(1)));
  for (std::size_t i = 0; i < xs.size(); ++i) xs[i] = 50.0 * static_cast<double>(i) / xs.size();
  const dini::Order nu(0.75);
  for (auto _ : state) {
    auto v = dini::evaluate_grid(dini::Function::dini_D, nu, xs, mode(state));
    benchmark::DoNotOptimize(v.data());
  }
  state.SetItemsProcessed(state.iterations() * state.range(1));
  state.SetLabel(state.range(0) == 0 ? "serial" : "parallel");
}
BENCHMARK(BM_EvaluateGrid)->ArgsProduct({{0, 1}, {1 << 10, 1 << 14}})->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();

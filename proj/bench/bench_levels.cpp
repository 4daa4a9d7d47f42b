// Serial reference against the OpenMP kernel.

#include <benchmark/benchmark.h>

#include <omp.h>

#include "weyl/orbit.hpp"
#include "weyl/rootdata.hpp"

using namespace weyl;

namespace {

const char* const kTypes[] = {"D4", "B5", "E6", "B6"};

void full_group(benchmark::State& state, Kernel kernel) {
  const auto rs = RootSystemData::builtin(kTypes[state.range(0)]);
  state.SetLabel(rs.name);
  std::uint64_t total = 0;
  for (auto _ : state) {
    GenerateOptions opt;
    opt.kernel = kernel;
    total = for_each_level(rs, opt, [](const Level& l) { benchmark::DoNotOptimize(l.size()); }).total;
  }
  state.counters["elements"] = static_cast<double>(total);
  state.counters["elements/s"] =
      benchmark::Counter(static_cast<double>(total), benchmark::Counter::kIsIterationInvariantRate);
}

void BM_serial(benchmark::State& state) { full_group(state, Kernel::serial); }
void BM_parallel(benchmark::State& state) { full_group(state, Kernel::parallel); }

// The widest level of E6 built from its predecessor.
void middle_level(benchmark::State& state, Kernel kernel) {
  const auto rs = RootSystemData::builtin("E6");
  GenerateOptions opt;
  opt.levels_up_to = static_cast<int>(rs.positive_root_count / 2) - 1;
  Level prev = build_level_zero(Weight(6, 1));
  for_each_level(rs, opt, [&](const Level& l) { prev = l; });
  for (auto _ : state) benchmark::DoNotOptimize(build_next_level(prev, rs, kernel).size());
}

void BM_serial_level(benchmark::State& state) { middle_level(state, Kernel::serial); }
void BM_parallel_level(benchmark::State& state) { middle_level(state, Kernel::parallel); }

}  // namespace

BENCHMARK(BM_serial)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_parallel)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_serial_level)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_parallel_level)->Unit(benchmark::kMillisecond);

int main(int argc, char** argv) {
  benchmark::Initialize(&argc, argv);
  benchmark::AddCustomContext("omp_max_threads", std::to_string(omp_get_max_threads()));
  benchmark::RunSpecifiedBenchmarks();
  benchmark::Shutdown();
}

// Serial reference vs OpenMP kernels on maps large enough to matter.

#include <benchmark/benchmark.h>

#include "sset/checks.hpp"
#include "sset/generate.hpp"
#include "sset/groupoid.hpp"
#include "sset/limits.hpp"
#include "sset/standard.hpp"

using namespace sset;

namespace {

// nerve(codiscrete(k)) -> point: Kan, every horn fillable, many lifts.
const SimplicialMap& codiscrete_to_point(int k) {
  static std::vector<std::optional<SimplicialMap>> cache(16);
  if (!cache[k]) cache[k] = to_terminal(share(nerve(FiniteGroupoid::codiscrete(k), 3)));
  return *cache[k];
}

// circle x nerve(Z/k) -> circle.
const SimplicialMap& projection(int k) {
  static std::vector<std::optional<SimplicialMap>> cache(16);
  if (!cache[k]) cache[k] = product(share(circle(3)), share(nerve(FiniteGroupoid::cyclic_group(k), 3))).pr1;
  return *cache[k];
}

Execution mode_of(const benchmark::State& s) {
  return s.range(1) ? Execution::parallel : Execution::serial_reference;
}

void label(benchmark::State& s) { s.SetLabel(s.range(1) ? "parallel" : "serial"); }

void BM_AmbiguousPairs(benchmark::State& s) {
  const SimplicialMap& h = codiscrete_to_point(static_cast<int>(s.range(0)));
  for (auto _ : s) {
    // The identity has no ambiguous pair, so the scan runs to completion.
    std::uint64_t examined = 0;
    benchmark::DoNotOptimize(kernels::ambiguous_pair_scan(identity_map(h.source_ptr()), mode_of(s), &examined));
  }
  label(s);
}

void BM_FillIn(benchmark::State& s) {
  const SimplicialMap h = identity_map(codiscrete_to_point(static_cast<int>(s.range(0))).source_ptr());
  for (auto _ : s) benchmark::DoNotOptimize(kernels::fill_in_scan(h, mode_of(s)));
  label(s);
}

void BM_Horn(benchmark::State& s) {
  const SimplicialMap& h = codiscrete_to_point(static_cast<int>(s.range(0)));
  for (auto _ : s) benchmark::DoNotOptimize(kernels::horn_scan(h, h.truncation(), mode_of(s)));
  label(s);
}

void BM_Leak(benchmark::State& s) {
  // C_k -> circle is separable: the leak scan visits every off-diagonal cell.
  const DiagonalData d = diagonal(build_fixture("cyclic-cover:" + std::to_string(s.range(0))));
  for (auto _ : s) benchmark::DoNotOptimize(kernels::leak_scan(*d.kernel_pair.object, d.image, mode_of(s)));
  label(s);
}

void BM_KanCheck(benchmark::State& s) {
  const SimplicialMap& h = projection(static_cast<int>(s.range(0)));
  for (auto _ : s) benchmark::DoNotOptimize(kan_check(h, std::nullopt, mode_of(s)));
  label(s);
}

}  // namespace

BENCHMARK(BM_AmbiguousPairs)->ArgsProduct({{3, 4}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_FillIn)->ArgsProduct({{3, 4}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Horn)->ArgsProduct({{3, 4}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Leak)->ArgsProduct({{8, 16}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_KanCheck)->ArgsProduct({{2, 3}, {0, 1}})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();

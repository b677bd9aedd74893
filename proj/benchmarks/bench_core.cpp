#include <benchmark/benchmark.h>

#include <thread>

#include "spinnet/json.hpp"

using namespace spinnet;

namespace {

// The 6j memo is per thread, so a fresh thread sees an empty cache.
void BM_SixJUncachedSweep(benchmark::State& state) {
  const int max = static_cast<int>(state.range(0));
  std::size_t count = 0;
  for (auto _ : state) {
    std::thread worker([&] {
      count = 0;
      for (int a = 0; a <= max; ++a)
        for (int b = 0; b <= max; ++b)
          for (int x = 0; x <= max; ++x)
            for (int c = 0; c <= max; ++c) {
              const SixJ s = SixJ::from_twice({a, b, x, c, max, max});
              if (s.valid()) {
                benchmark::DoNotOptimize(sixj_value(s));
                ++count;
              }
            }
    });
    worker.join();
  }
  state.counters["symbols"] = static_cast<double>(count);
}
BENCHMARK(BM_SixJUncachedSweep)->Arg(4)->Arg(12)->Unit(benchmark::kMillisecond)->UseRealTime();

void BM_SixJLargeUncached(benchmark::State& state) {
  const int j = static_cast<int>(state.range(0));
  for (auto _ : state) {
    std::thread worker([&] { benchmark::DoNotOptimize(sixj_value(SixJ::from_twice({j, j, j, j, j, j}))); });
    worker.join();
  }
}
BENCHMARK(BM_SixJLargeUncached)->Arg(40)->Arg(120)->Unit(benchmark::kMicrosecond)->UseRealTime();

void BM_SixJMemoized(benchmark::State& state) {
  const SixJ s = SixJ::from_twice({40, 40, 40, 40, 40, 40});
  sixj_value(s);
  for (auto _ : state) benchmark::DoNotOptimize(sixj_value(s));
}
BENCHMARK(BM_SixJMemoized);

void BM_SqrtRationalMul(benchmark::State& state) {
  const SqrtRational u(Rational(3, 7), Rational(30, 11));
  const SqrtRational v(Rational(-5, 2), Rational(66, 5));
  for (auto _ : state) benchmark::DoNotOptimize(u * v);
}
BENCHMARK(BM_SqrtRationalMul);

void BM_BECheck(benchmark::State& state) {
  const auto inst = BEInstance::uniform(Spin::from_twice(static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(be_check(inst));
}
BENCHMARK(BM_BECheck)->Arg(2)->Arg(8)->Arg(16);

void BM_VerifyGridBE(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(verify_grid(static_cast<int>(state.range(0)), GridKind::BE));
}
BENCHMARK(BM_VerifyGridBE)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_SymmetryOrbit(benchmark::State& state) {
  const SixJ s = SixJ::from_twice({4, 6, 8, 6, 4, 6});
  for (auto _ : state) benchmark::DoNotOptimize(symmetry_orbit(s));
}
BENCHMARK(BM_SymmetryOrbit);

void BM_Canonicalize(benchmark::State& state) {
  const Spin a = Spin::from_twice(6), b = Spin::from_twice(4), c = Spin::from_twice(8), d = Spin::from_twice(6);
  for (auto _ : state) benchmark::DoNotOptimize(canonicalize_quadruple(a, b, c, d));
}
BENCHMARK(BM_Canonicalize);

void BM_IsomorphicDesargues(benchmark::State& state) {
  const auto d = build_desargues();
  const auto x = cross_section(space_dual_desargues(d));
  for (auto _ : state) benchmark::DoNotOptimize(isomorphic(d, x));
}
BENCHMARK(BM_IsomorphicDesargues);

void BM_SpaceDualPipeline(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(cross_section(space_dual_desargues(build_desargues())));
}
BENCHMARK(BM_SpaceDualPipeline);

void BM_NetworkAmplitude(benchmark::State& state) {
  SymbolSpins s;
  for (Symbol k : kAllSymbols) s[k] = Spin::from_twice(4);
  const auto labeling = label_desargues(s);
  for (auto _ : state) benchmark::DoNotOptimize(network_amplitude(labeling));
}
BENCHMARK(BM_NetworkAmplitude);

}  // namespace

BENCHMARK_MAIN();

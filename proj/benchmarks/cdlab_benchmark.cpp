// SPDX-License-Identifier: Apache-2.0
#include <benchmark/benchmark.h>

#include <cdlab/dilates.hpp>
#include <cdlab/image.hpp>
#include <cdlab/supports.hpp>

using namespace cdlab;

namespace {

FpMatrix lstar(PrimeModulus f) { return FpMatrix(f, {{1, 1, 0}, {1, 0, 1}}); }

void BM_ImageDense(benchmark::State& state) {
  const PrimeModulus f(101);
  const auto k = static_cast<std::uint32_t>(state.range(0));
  const auto sets = SetSystem::intervals(f, {k, k, k});
  for (auto _ : state) benchmark::DoNotOptimize(image_size(lstar(f), sets).size);
  state.SetItemsProcessed(state.iterations() * k * k * k);
}
BENCHMARK(BM_ImageDense)->Arg(8)->Arg(32)->Arg(64);

void BM_ImageHash(benchmark::State& state) {
  const PrimeModulus f(101);
  const auto k = static_cast<std::uint32_t>(state.range(0));
  const auto sets = SetSystem::intervals(f, {k, k, k});
  ImageOptions options;
  options.dense_limit = 0;
  for (auto _ : state) benchmark::DoNotOptimize(image_size(lstar(f), sets, false, options).size);
  state.SetItemsProcessed(state.iterations() * k * k * k);
}
BENCHMARK(BM_ImageHash)->Arg(8)->Arg(32)->Arg(64);

void BM_ImageCounter(benchmark::State& state) {
  const PrimeModulus f(101);
  const auto l = dilate_matrix(2, f);
  const auto sets = SetSystem::intervals(f, {4, 4, 4, 4});
  ImageCounter counter(l);
  for (auto _ : state) benchmark::DoNotOptimize(counter.count(sets.sets()));
}
BENCHMARK(BM_ImageCounter);

void BM_MuExact(benchmark::State& state) {
  const auto p = static_cast<std::uint32_t>(state.range(0));
  const PrimeModulus f(p);
  for (auto _ : state) benchmark::DoNotOptimize(mu_exact(lstar(f), SizeVector({2, 2, 2}, f)).mu);
}
BENCHMARK(BM_MuExact)->Arg(5)->Arg(7)->Arg(11)->Unit(benchmark::kMillisecond);

void BM_SupportKernel(benchmark::State& state) {
  const PrimeModulus f(101);
  const auto n = static_cast<std::size_t>(state.range(0));
  FpMatrix l(f, 2, n);
  for (std::size_t c = 0; c < n; ++c) {
    l.set(0, c, static_cast<std::uint32_t>(c + 1));
    l.set(1, c, static_cast<std::uint32_t>((c * c + 3) % 101));
  }
  for (auto _ : state) benchmark::DoNotOptimize(support_kernel(l).size());
}
BENCHMARK(BM_SupportKernel)->Arg(6)->Arg(10)->Arg(14);

}  // namespace

BENCHMARK_MAIN();

#include <benchmark/benchmark.h>

#include "ampsup/bergman.hpp"

using namespace ampsup;

namespace {

const quaternion::Order& order() {
  static const auto o = quaternion::Order::build(quaternion::MaximalOrderConfig::default_instance());
  return o;
}

const geometry::UhpPoint z{0.3, 1.7};

void BM_EnumerateParallel(benchmark::State& state) {
  const double cap = static_cast<double>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(lattice::enumerate_ball(order(), state.range(0), z, z, cap));
}

void BM_EnumerateSerial(benchmark::State& state) {
  const double cap = static_cast<double>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(lattice::serial::enumerate_ball(order(), state.range(0), z, z, cap));
}

void BM_KernelTermsParallel(benchmark::State& state) {
  const auto ball = lattice::enumerate_ball(order(), 1, z, z, static_cast<double>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(bergman::detail::kernel_terms(order(), ball.points, z, z, 20));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(ball.size()));
}

void BM_KernelTermsSerial(benchmark::State& state) {
  const auto ball = lattice::enumerate_ball(order(), 1, z, z, static_cast<double>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(bergman::detail::serial::kernel_terms(order(), ball.points, z, z, 20));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(ball.size()));
}

}  // namespace

BENCHMARK(BM_EnumerateParallel)->Args({1, 4096})->Args({25, 256})->Args({625, 64})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_EnumerateSerial)->Args({1, 4096})->Args({25, 256})->Args({625, 64})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_KernelTermsParallel)->Arg(1024)->Arg(16384)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_KernelTermsSerial)->Arg(1024)->Arg(16384)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();

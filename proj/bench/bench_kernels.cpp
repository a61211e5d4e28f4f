// Parallel mode action against the serial reference on the same inputs.
#include <benchmark/benchmark.h>

#include "e6voa/hwv.hpp"
#include "e6voa/vertex.hpp"
#include "e6voa/virasoro.hpp"

using namespace e6voa;

namespace {

State sum_of_tests(int cap) {
  State s;
  for (const auto& t : virasoro::graded_test_states(cap)) s += t;
  return s;
}

void BM_omega_serial(benchmark::State& st) {
  const State& om = virasoro::omega_f4().state;
  State w = sum_of_tests(1);
  for (auto _ : st) benchmark::DoNotOptimize(vertex::mode_action_serial(om, 1, w));
}

void BM_omega_parallel(benchmark::State& st) {
  const State& om = virasoro::omega_f4().state;
  State w = sum_of_tests(1);
  for (auto _ : st) benchmark::DoNotOptimize(vertex::mode_action(om, 1, w));
}

void BM_r_tau_r_serial(benchmark::State& st) {
  State r = hwv::r_vector(), tr = fock::tau_hat(r);
  for (auto _ : st) benchmark::DoNotOptimize(vertex::mode_action_serial(r, frac(-8, 3), tr));
}

void BM_r_tau_r_parallel(benchmark::State& st) {
  State r = hwv::r_vector(), tr = fock::tau_hat(r);
  for (auto _ : st) benchmark::DoNotOptimize(vertex::mode_action(r, frac(-8, 3), tr));
}

}  // namespace

BENCHMARK(BM_omega_serial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_omega_parallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_r_tau_r_serial)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_r_tau_r_parallel)->Unit(benchmark::kMicrosecond);

BENCHMARK_MAIN();

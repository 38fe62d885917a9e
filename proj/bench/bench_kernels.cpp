// OpenMP kernels against their serial references. Thread count follows
// OMP_NUM_THREADS; on a single core the two should be within noise.

#include <benchmark/benchmark.h>

#include "dimwit/optimize.hpp"

using namespace dimwit;

namespace {

OptimizerConfig config(int restarts, int max_iterations = 500) {
    OptimizerConfig cfg;
    cfg.restarts = restarts;
    cfg.max_iterations = max_iterations;
    cfg.seed = 17;
    return cfg;
}

void BM_QuantumSeesaw(benchmark::State& state) {
    const auto cfg = config(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(maximize_witness_quantum(3, 2, cfg).best_value);
}

void BM_QuantumSeesawSerial(benchmark::State& state) {
    const auto cfg = config(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(reference::maximize_witness_quantum_serial(3, 2, cfg).best_value);
}

void BM_ClassicalSeesaw(benchmark::State& state) {
    const auto cfg = config(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(maximize_witness_classical_seesaw(4, 3, cfg).best_value);
}

void BM_ClassicalSeesawSerial(benchmark::State& state) {
    const auto cfg = config(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(reference::maximize_witness_classical_seesaw_serial(4, 3, cfg).best_value);
}

void BM_BruteForce(benchmark::State& state) {
    const int d = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(maximize_witness_classical_bruteforce(d, 2).best_value);
}

void BM_BruteForceSerial(benchmark::State& state) {
    const int d = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(reference::maximize_witness_classical_bruteforce_serial(d, 2).best_value);
}

void BM_Guessing(benchmark::State& state) {
    const auto cfg = config(static_cast<int>(state.range(0)), 3000);
    for (auto _ : state) benchmark::DoNotOptimize(maximize_guessing_probability(0.5, cfg).best_value);
}

void BM_GuessingSerial(benchmark::State& state) {
    const auto cfg = config(static_cast<int>(state.range(0)), 3000);
    for (auto _ : state) benchmark::DoNotOptimize(reference::maximize_guessing_probability_serial(0.5, cfg).best_value);
}

}  // namespace

BENCHMARK(BM_QuantumSeesaw)->Arg(50)->Arg(200)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_QuantumSeesawSerial)->Arg(50)->Arg(200)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ClassicalSeesaw)->Arg(50)->Arg(200)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ClassicalSeesawSerial)->Arg(50)->Arg(200)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BruteForce)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BruteForceSerial)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Guessing)->Arg(10)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_GuessingSerial)->Arg(10)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();

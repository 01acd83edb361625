#include <random>

#include <benchmark/benchmark.h>

#include "lpadic/kernels.hpp"
#include "lpadic/measures.hpp"

using namespace lpadic;

namespace {

FiniteLevelMeasure random_measure(long p, long r, long d) {
    std::mt19937_64 g(42);
    std::uniform_int_distribution<long> u(-50, 50);
    FiniteLevelMeasure mu(p, r, d);
    for (long i = 0; i < mu.size(); ++i) mu.set(mu.point(i), CycloRational(u(g)));
    return mu;
}

void batch(benchmark::State& st, bool omp) {
    auto mu = random_measure(5, 2, 1);
    std::vector<Point> chars;
    for (long i = 0; i < mu.size(); ++i) chars.push_back(mu.point(i));
    for (auto _ : st) {
        auto v = omp ? batch_integrate_omp(mu, chars) : batch_integrate_serial(mu, chars);
        benchmark::DoNotOptimize(v);
    }
}

void scan(benchmark::State& st, bool omp) {
    auto mu = random_measure(3, 4, 1);
    for (auto _ : st) {
        auto r = omp ? congruence_scan_omp(mu) : congruence_scan_serial(mu);
        benchmark::DoNotOptimize(r);
    }
}

void mazur(benchmark::State& st, ExecPolicy pol) {
    for (auto _ : st) {
        auto m = mazur_measure(5, 2, 12, 1, -1, pol);
        benchmark::DoNotOptimize(m);
    }
}

}  // namespace

BENCHMARK_CAPTURE(batch, serial, false)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(batch, omp, true)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(scan, serial, false)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(scan, omp, true)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(mazur, serial, ExecPolicy::Serial)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(mazur, omp, ExecPolicy::Parallel)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();

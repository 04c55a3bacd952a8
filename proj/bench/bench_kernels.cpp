#include <benchmark/benchmark.h>

#include "floer/ainfty.hpp"
#include "floer/export.hpp"
#include "floer/parallel.hpp"
#include "floer/torus.hpp"

using namespace floer;

namespace {

const Point2 kOrigin{0, 0};

TorusLagrangian lag(int i) {
    static const TorusLagrangian L[] = {TorusLagrangian(0, 1, 0), TorusLagrangian(1, 0, 0), TorusLagrangian(1, -1, 0)};
    return L[i];
}

void BM_ThetaSerial(benchmark::State& st) {
    Rational E(st.range(0));
    for (auto _ : st)
        benchmark::DoNotOptimize(enumerate_triangles_serial(lag(0), lag(1), lag(2), kOrigin, kOrigin, kOrigin, E));
}

void BM_ThetaParallel(benchmark::State& st) {
    Rational E(st.range(0));
    for (auto _ : st)
        benchmark::DoNotOptimize(enumerate_triangles(lag(0), lag(1), lag(2), kOrigin, kOrigin, kOrigin, E));
    st.counters["threads"] = thread_count();
}

// many anchored lines through the origin with distinct slopes
AInftyStructure fan(int n) {
    std::vector<AnchoredLag> lags;
    for (int k = 0; k < n; ++k) lags.emplace_back(TorusLagrangian(1, k - n / 2, 0), Anchor::straight(kOrigin, kOrigin));
    return anchored_structure(lags, Rational(8));
}

void BM_ResidualSerial(benchmark::State& st) {
    AInftyStructure S = fan(static_cast<int>(st.range(0)));
    for (auto _ : st) benchmark::DoNotOptimize(ainfty_residual_serial(S, 3));
}

void BM_ResidualParallel(benchmark::State& st) {
    AInftyStructure S = fan(static_cast<int>(st.range(0)));
    for (auto _ : st) benchmark::DoNotOptimize(ainfty_residual(S, 3));
    st.counters["threads"] = thread_count();
}

}  // namespace

BENCHMARK(BM_ThetaSerial)->Arg(2000)->Arg(20000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ThetaParallel)->Arg(2000)->Arg(20000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ResidualSerial)->Arg(6)->Arg(9)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ResidualParallel)->Arg(6)->Arg(9)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();

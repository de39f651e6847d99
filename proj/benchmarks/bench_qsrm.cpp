#include <cmath>

#include <benchmark/benchmark.h>

#include "qsrm/baseline.hpp"
#include "qsrm/glauber.hpp"
#include "qsrm/gus.hpp"

namespace {

using namespace qsrm;

void BM_ThermalDensity(benchmark::State &state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(thermal_density({Complex(2.0, 0.5)}, ThermalNoise(0.1), n));
    }
}
BENCHMARK(BM_ThermalDensity)->Arg(20)->Arg(40)->Arg(80)->Arg(160);

void BM_LowRankFactor(benchmark::State &state) {
    const int n = static_cast<int>(state.range(0));
    const DensityMatrix rho = thermal_density({Complex(2.0, 0.0)}, ThermalNoise(0.1), n);
    for (auto _ : state) {
        benchmark::DoNotOptimize(low_rank_factor(rho.matrix(), 1e-5));
    }
}
BENCHMARK(BM_LowRankFactor)->Arg(20)->Arg(40)->Arg(80)->Arg(160);

void BM_GusPsk(benchmark::State &state) {
    const int m = static_cast<int>(state.range(0));
    DetectionOptions options;
    for (auto _ : state) {
        benchmark::DoNotOptimize(evaluate_gus(psk(m, 4.0), ThermalNoise(0.1), options));
    }
}
BENCHMARK(BM_GusPsk)->Arg(4)->Arg(8)->Arg(16)->Unit(benchmark::kMicrosecond);

void BM_GeneralPsk(benchmark::State &state) {
    const int m = static_cast<int>(state.range(0));
    DetectionOptions options;
    for (auto _ : state) {
        benchmark::DoNotOptimize(evaluate_srm(psk(m, 4.0), ThermalNoise(0.1), options));
    }
}
BENCHMARK(BM_GeneralPsk)->Arg(4)->Arg(8)->Arg(16)->Unit(benchmark::kMillisecond);

void BM_Qam16(benchmark::State &state) {
    DetectionOptions options;
    options.epsilon = 1e-7;
    options.dimension = static_cast<int>(state.range(0));
    options.route = state.range(1) == 0 ? Route::ViaT : Route::ViaG;
    for (auto _ : state) {
        benchmark::DoNotOptimize(evaluate_srm(qam(4, 4.0), ThermalNoise(0.1), options));
    }
    state.SetLabel(state.range(1) == 0 ? "via_T" : "via_G");
}
BENCHMARK(BM_Qam16)
    ->Args({40, 0})
    ->Args({40, 1})
    ->Args({80, 0})
    ->Unit(benchmark::kMillisecond);

void BM_HomodynePsk(benchmark::State &state) {
    const Modulation mod = Modulation::psk(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(homodyne_pe(mod, 2.0, 0.1));
    }
}
BENCHMARK(BM_HomodynePsk)->Arg(4)->Arg(16);

void BM_HelstromBinary(benchmark::State &state) {
    const int n = static_cast<int>(state.range(0));
    const DensityMatrix r0 = thermal_density({Complex(1.0, 0.0)}, ThermalNoise(0.1), n);
    const DensityMatrix r1 = thermal_density({Complex(-1.0, 0.0)}, ThermalNoise(0.1), n);
    for (auto _ : state) {
        benchmark::DoNotOptimize(helstrom_binary_pe(r0, r1, 0.5, 0.5));
    }
}
BENCHMARK(BM_HelstromBinary)->Arg(20)->Arg(60);

}  // namespace

BENCHMARK_MAIN();

// Serial reference against the OpenMP path for the three parallel kernels.
//   ./psolve_bench --benchmark_filter=BruteForce

#include <benchmark/benchmark.h>

#include "psolve/darboux.hpp"
#include "psolve/parse.hpp"
#include "psolve/psengine.hpp"

using namespace psolve;

namespace {

VectorField field(const char* ode) {
    auto spec = parse_ode(ode);
    return VectorField(spec.M, spec.N);
}

const char* kFirst = "dy/dx = (3*x^2*y^2 + x^3 + 1) / (4*(x+1)*(x^2-x+1)*y)";
const char* kSecond = "dy/dx = y^2 + y*x + x - 1";

Execution mode(const benchmark::State& state) { return state.range(0) == 0 ? Execution::serial : Execution::parallel; }

void BM_BruteForce(benchmark::State& state) {
    const auto vf = field(kFirst);
    const std::vector<Rational> grid{-2, -1, 0, 1, 2};
    for (auto _ : state) benchmark::DoNotOptimize(brute_force_darboux(vf, 2, grid, mode(state)));
}

void BM_FindDarboux(benchmark::State& state) {
    const auto vf = field(kFirst);
    for (auto _ : state) benchmark::DoNotOptimize(find_darboux(vf, static_cast<int>(state.range(1)), mode(state)));
}

void BM_Liouvillian(benchmark::State& state) {
    const auto vf = field(kSecond);
    const auto pairs = find_darboux(vf, 3);
    for (auto _ : state) benchmark::DoNotOptimize(solve_liouvillian(vf, pairs, 4, 3, mode(state)));
}

}  // namespace

// range(0): 0 = serial, 1 = OpenMP.
BENCHMARK(BM_BruteForce)->ArgName("parallel")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_FindDarboux)->ArgNames({"parallel", "bound"})->Args({0, 3})->Args({1, 3})->Args({0, 4})->Args({1, 4})
    ->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_Liouvillian)->ArgName("parallel")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();

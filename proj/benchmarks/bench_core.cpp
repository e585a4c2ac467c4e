#include <benchmark/benchmark.h>

#include "etg/complex_curve.hpp"
#include "etg/curve.hpp"
#include "etg/elliptic.hpp"
#include "etg/involution.hpp"

namespace {

using namespace etg;

const Delta kDelta{-0.05, 0.05, -0.05};
const State kX{1.0, 0.5, 0.5};

void BM_JacobiReal(benchmark::State& st) {
  const Modulus k = Modulus::from_k(0.7);
  double u = 0.1;
  for (auto _ : st) {
    benchmark::DoNotOptimize(jacobi_real(u, k));
    u += 0.37;
  }
}
BENCHMARK(BM_JacobiReal);

void BM_JacobiComplex(benchmark::State& st) {
  const Modulus k = Modulus::from_k(0.7);
  Complex z{0.1, 0.2};
  for (auto _ : st) {
    benchmark::DoNotOptimize(jacobi_complex(z, k));
    z += Complex(0.37, 0.11);
  }
}
BENCHMARK(BM_JacobiComplex);

void BM_Arcsn(benchmark::State& st) {
  const Modulus k = Modulus::from_k(0.7);
  for (auto _ : st) benchmark::DoNotOptimize(arcsn(0.6, k));
}
BENCHMARK(BM_Arcsn);

void BM_HkMap(benchmark::State& st) {
  State x = kX;
  for (auto _ : st) {
    x = hk_map(x, kDelta);
    benchmark::DoNotOptimize(x);
  }
}
BENCHMARK(BM_HkMap);

void BM_SqrtMap(benchmark::State& st) {
  State x = kX;
  for (auto _ : st) {
    x = sqrt_map(x, kDelta);
    benchmark::DoNotOptimize(x);
  }
}
BENCHMARK(BM_SqrtMap);

void BM_OrbitFromState(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(orbit_from_state(kX, kDelta));
}
BENCHMARK(BM_OrbitFromState);

void BM_ComposeDEt(benchmark::State& st) {
  const Orbit o = orbit_from_state(kX, kDelta);
  for (auto _ : st) benchmark::DoNotOptimize(compose_dEt(kX, 0.5 * o.nu, o));
}
BENCHMARK(BM_ComposeDEt);

void BM_EllipticSolution(benchmark::State& st) {
  const Orbit o = orbit_from_state(kX, kDelta);
  const int n = static_cast<int>(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(elliptic_solution(o.chart, Phase{o.u0}, o.nu, n));
  st.SetItemsProcessed(st.iterations() * n);
}
BENCHMARK(BM_EllipticSolution)->Arg(100)->Arg(10000);

}  // namespace

BENCHMARK_MAIN();

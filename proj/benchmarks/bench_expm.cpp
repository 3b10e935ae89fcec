#include <benchmark/benchmark.h>

#include "rodstab/conjugate.hpp"
#include "rodstab/cross_section.hpp"
#include "rodstab/expm.hpp"
#include "rodstab/helix.hpp"

using namespace rodstab;

namespace {

SecondOrderSystem figure_system() {
  MaterialParams mp;
  CrossSection cs(0.6);
  const RodCoefficients rc = build_coefficients(mp, cs, 6.0, 1.0);
  const HelixSpec h = build_helix(rc, 40.0, 0.05, 1.0);
  return assemble_system(h.omega, h.r, rc, h.f);
}

void BM_Expm6(benchmark::State& state) {
  const SecondOrderSystem sys = figure_system();
  double t = 0.3;
  for (auto _ : state) {
    benchmark::DoNotOptimize(expm(sys.Gamma * t));
    t = t < 1.0 ? t + 1e-4 : 0.3;
  }
}
BENCHMARK(BM_Expm6);

void BM_FundamentalMatrix(benchmark::State& state) {
  const SecondOrderSystem sys = figure_system();
  for (auto _ : state) benchmark::DoNotOptimize(fundamental_matrix(sys, 0.7));
}
BENCHMARK(BM_FundamentalMatrix);

}  // namespace

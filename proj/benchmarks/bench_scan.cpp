#include <benchmark/benchmark.h>

#include "rodstab/conjugate.hpp"
#include "rodstab/critical_force.hpp"
#include "rodstab/cross_section.hpp"
#include "rodstab/helix.hpp"

using namespace rodstab;

namespace {

void BM_Scan(benchmark::State& state) {
  MaterialParams mp;
  const RodCoefficients rc = build_coefficients(mp, CrossSection(0.6), 6.0, 1.0);
  const auto b = f_crit_analytic(rc, BoundaryCondition::weak_clamped());
  const HelixSpec h = build_helix(rc, 0.999 * b.f_crit, 0.05, 1.0);
  const SecondOrderSystem sys = assemble_system(h.omega, h.r, rc, h.f);
  ScanOptions so;
  so.n_samples = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(scan(sys, 1.0, so));
}
BENCHMARK(BM_Scan)->Arg(128)->Arg(512);

void BM_FcritNumeric(benchmark::State& state) {
  MaterialParams mp;
  const RodCoefficients rc = build_coefficients(mp, CrossSection(0.6), 6.0, 1.0);
  for (auto _ : state)
    benchmark::DoNotOptimize(
        f_crit_numeric(rc, BoundaryCondition::weak_clamped(), 400));
}
BENCHMARK(BM_FcritNumeric);

}  // namespace

BENCHMARK_MAIN();

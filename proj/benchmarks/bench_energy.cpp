#include <benchmark/benchmark.h>

#include <random>

#include "rodstab/cross_section.hpp"
#include "rodstab/energy.hpp"
#include "rodstab/so3.hpp"

using namespace rodstab;

namespace {

RotationCurve wavy_curve(int N) {
  std::vector<Mat3> frames;
  frames.reserve(N + 1);
  for (int i = 0; i <= N; ++i) {
    const double x = static_cast<double>(i) / N;
    frames.push_back(exp_skew(Vec3(0.3 * std::sin(M_PI * x),
                                   0.7 * std::sin(2 * M_PI * x),
                                   0.2 * std::sin(3 * M_PI * x))));
  }
  return RotationCurve(std::move(frames), 1.0);
}

void BM_Energy(benchmark::State& state) {
  MaterialParams mp;
  const RodCoefficients rc = build_coefficients(mp, CrossSection(0.6), 6.0, 1.0);
  const RotationCurve curve = wavy_curve(static_cast<int>(state.range(0)));
  const BoundaryCondition bc = BoundaryCondition::weak_free();
  for (auto _ : state) benchmark::DoNotOptimize(energy(curve, rc, 1.5, bc));
}
BENCHMARK(BM_Energy)->Arg(100)->Arg(400);

void BM_Gradient(benchmark::State& state) {
  MaterialParams mp;
  const RodCoefficients rc = build_coefficients(mp, CrossSection(0.6), 6.0, 1.0);
  const RotationCurve curve = wavy_curve(static_cast<int>(state.range(0)));
  const BoundaryCondition bc = BoundaryCondition::weak_free();
  for (auto _ : state) benchmark::DoNotOptimize(gradient(curve, rc, 1.5, bc));
}
BENCHMARK(BM_Gradient)->Arg(100)->Arg(400);

void BM_TorsionSeries(benchmark::State& state) {
  const CrossSection cs(0.45);
  for (auto _ : state) benchmark::DoNotOptimize(torsional_rigidity(cs, 32));
}
BENCHMARK(BM_TorsionSeries);

}  // namespace

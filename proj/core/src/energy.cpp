#include "rodstab/energy.hpp"

#include <cmath>

#include "rodstab/so3.hpp"

namespace rodstab {

namespace {

const Vec3 kE1(1.0, 0.0, 0.0);
const Vec3 kE2(0.0, 1.0, 0.0);

void check_bc(const RotationCurve& curve, const BoundaryCondition& bc) {
  const double v = bc.violation(curve.frame(0), curve.frame(curve.segments()));
  if (v > 1e-8) throw BcViolation("curve violates boundary condition");
}

double trapezoid_weight(int i, int N) { return (i == 0 || i == N) ? 0.5 : 1.0; }

/// Flux C (omega - k e2) per midpoint.
std::vector<Vec3> fluxes(const StrainField& sf, const RodCoefficients& rc) {
  const Mat3 C = rc.cmat();
  std::vector<Vec3> m;
  m.reserve(sf.omegas.size());
  for (const Vec3& w : sf.omegas) m.push_back(C * (w - rc.k * kE2));
  return m;
}

/// Unprojected gradient; also used by el_residual.
std::vector<Vec3> raw_gradient(const RotationCurve& curve,
                               const RodCoefficients& rc, double f) {
  const StrainField sf = strains(curve);
  const std::vector<Vec3> m = fluxes(sf, rc);
  const int N = curve.segments();
  const double h = curve.h();
  std::vector<Vec3> g(N + 1, Vec3::Zero());
  for (int j = 0; j < N; ++j) {
    const Vec3 theta = h * sf.omegas[j];
    const Mat3 Jri = right_jacobian_inverse(theta);
    // d/d eta_j   of (h/2) q2(omega_j):  -J_r^{-1}(theta) m_j
    // d/d eta_j+1 of (h/2) q2(omega_j):  +J_r^{-T}(theta) m_j
    g[j] -= Jri * m[j];
    g[j + 1] += Jri.transpose() * m[j];
  }
  if (f != 0.0) {
    for (int i = 0; i <= N; ++i) {
      const Vec3 r = curve.frame(i).transpose() * kE1;
      g[i] -= f * h * trapezoid_weight(i, N) * kE1.cross(r);
    }
  }
  return g;
}

void project_gradient(std::vector<Vec3>& g, const BoundaryCondition& bc) {
  const int last = static_cast<int>(g.size()) - 1;
  switch (bc.kind) {
    case BoundaryCondition::Kind::WeakFree:
      break;
    case BoundaryCondition::Kind::Clamped:
      g[0].setZero();
      break;
    case BoundaryCondition::Kind::ClampedClamped:
      g[0].setZero();
      g[last].setZero();
      break;
    case BoundaryCondition::Kind::WeakClamped:
      g[0].y() = g[0].z() = 0.0;
      g[last].y() = g[last].z() = 0.0;
      break;
  }
}

double grad_max_norm(const std::vector<Vec3>& g) {
  double m = 0.0;
  for (const Vec3& v : g) m = std::max(m, v.lpNorm<Eigen::Infinity>());
  return m;
}

}  // namespace

EnergyParts energy_parts(const RotationCurve& curve, const RodCoefficients& rc,
                         double f, const BoundaryCondition& bc) {
  check_bc(curve, bc);
  const StrainField sf = strains(curve);
  const Mat3 C = rc.cmat();
  const double h = curve.h();
  double elastic = 0.0;
  for (const Vec3& w : sf.omegas) {
    const Vec3 d = w - rc.k * kE2;
    elastic += 0.5 * h * d.dot(C * d);
  }
  double force = 0.0;
  const int N = curve.segments();
  for (int i = 0; i <= N; ++i)
    force += trapezoid_weight(i, N) * curve.frame(i)(0, 0);
  return {elastic, -f * h * force};
}

double energy(const RotationCurve& curve, const RodCoefficients& rc, double f,
              const BoundaryCondition& bc) {
  return energy_parts(curve, rc, f, bc).total();
}

std::vector<Vec3> gradient(const RotationCurve& curve,
                           const RodCoefficients& rc, double f,
                           const BoundaryCondition& bc) {
  check_bc(curve, bc);
  std::vector<Vec3> g = raw_gradient(curve, rc, f);
  project_gradient(g, bc);
  return g;
}

ElResidual el_residual(const RotationCurve& curve, const RodCoefficients& rc,
                       double f, const BoundaryCondition& bc) {
  if (curve.segments() < 8)
    throw std::invalid_argument("el_residual needs N >= 8");
  const StrainField sf = strains(curve);
  const std::vector<Vec3> m = fluxes(sf, rc);
  const std::vector<Vec3> g = raw_gradient(curve, rc, f);
  const int N = curve.segments();
  const double h = curve.h();

  // At interior nodes the scaled gradient is a second-order finite-difference
  // residual of the strong equation in body coordinates.
  double interior = 0.0;
  for (int i = 1; i < N; ++i)
    interior = std::max(interior, 2.0 * g[i].norm() / h);

  double natural = 0.0;
  const Vec3 grad0 = 2.0 * m.front();
  const Vec3 gradL = 2.0 * m.back();
  switch (bc.kind) {
    case BoundaryCondition::Kind::WeakFree:
      natural = std::max(grad0.norm(), gradL.norm());
      break;
    case BoundaryCondition::Kind::Clamped:
      natural = gradL.norm();
      break;
    case BoundaryCondition::Kind::WeakClamped:
      natural = std::max(std::abs(grad0.x()), std::abs(gradL.x()));
      break;
    case BoundaryCondition::Kind::ClampedClamped:
      natural = 0.0;
      break;
  }
  return {interior, natural};
}

MinimizeResult minimize(const RotationCurve& curve0, const RodCoefficients& rc,
                        double f, const BoundaryCondition& bc,
                        const MinimizeOptions& opts) {
  check_bc(curve0, bc);
  RotationCurve curve = curve0;
  const int N = curve.segments();

  double E = energy(curve, rc, f, bc);
  std::vector<double> trace{E};
  std::vector<Vec3> g = gradient(curve, rc, f, bc);
  double gnorm = grad_max_norm(g);

  double step = opts.step;
  std::vector<Vec3> g_prev;
  double step_prev = 0.0;

  int it = 0;
  for (; it < opts.max_iter && gnorm > opts.tol; ++it) {
    double g2 = 0.0;
    for (const Vec3& v : g) g2 += v.squaredNorm();

    // Barzilai-Borwein warm start along the gradient-descent history:
    // s = -step_prev * g_prev, y = g - g_prev.
    if (!g_prev.empty()) {
      double sy = 0.0, ss = 0.0;
      for (size_t i = 0; i < g.size(); ++i) {
        const Vec3 s = -step_prev * g_prev[i];
        sy += s.dot(g[i] - g_prev[i]);
        ss += s.squaredNorm();
      }
      if (sy > 0.0 && std::isfinite(ss / sy))
        step = ss / sy;
      else
        step = 2.0 * step_prev;
    }

    bool accepted = false;
    for (int bt = 0; bt < 60; ++bt) {
      RotationCurve trial = curve;
      for (int i = 0; i <= N; ++i)
        if (g[i].squaredNorm() != 0.0)
          trial.frame(i) = trial.frame(i) * exp_skew(-step * g[i]);
      double Et;
      try {
        Et = energy(trial, rc, f, bc);
      } catch (const FrameJump&) {
        step *= 0.5;  // left the chart; treat as an infeasible trial
        continue;
      }
      if (Et <= E - 1e-4 * step * g2) {
        curve = std::move(trial);
        E = Et;
        accepted = true;
        break;
      }
      step *= 0.5;
    }
    if (!accepted) break;  // step underflow; gradient norm reported below

    trace.push_back(E);
    g_prev = std::move(g);
    step_prev = step;
    g = gradient(curve, rc, f, bc);
    gnorm = grad_max_norm(g);
  }

  return {std::move(curve), std::move(trace), gnorm <= opts.tol, it, gnorm};
}

}  // namespace rodstab

#pragma once

#include <vector>

#include "rodstab/cross_section.hpp"
#include "rodstab/rotation_curve.hpp"

namespace rodstab {

struct EnergyParts {
  double elastic;
  double force;
  double total() const { return elastic + force; }
};

/// Discrete energy: midpoint strains for the elastic density, trapezoidal
/// quadrature for the force term -f <e1, R e1>. Checks bc within 1e-8.
EnergyParts energy_parts(const RotationCurve& curve, const RodCoefficients& rc,
                         double f, const BoundaryCondition& bc);

double energy(const RotationCurve& curve, const RodCoefficients& rc, double f,
              const BoundaryCondition& bc);

/// Exact gradient of the discrete energy with respect to right-multiplicative
/// body perturbations R_i <- R_i exp_skew(eta_i), projected onto the bc's
/// admissible space (fixed frames get zero; weak-clamped ends keep only the
/// twist component).
std::vector<Vec3> gradient(const RotationCurve& curve,
                           const RodCoefficients& rc, double f,
                           const BoundaryCondition& bc);

struct ElResidual {
  double interior;     ///< max over interior nodes of the strong-form residual
  double natural_bc;   ///< max violation of the natural/mixed end conditions
};

/// Finite-difference residual of (R grad_y q2)' = 2 f e1 x R e1 with
/// grad_y q2(v) = 2 C (v - k e2), plus the natural-boundary residual that the
/// regime leaves unconstrained (full gradient for WeakFree, at L for Clamped,
/// twist component only for WeakClamped, none for ClampedClamped).
ElResidual el_residual(const RotationCurve& curve, const RodCoefficients& rc,
                       double f, const BoundaryCondition& bc);

struct MinimizeOptions {
  int max_iter = 50000;
  double step = 1.0;    ///< initial Armijo trial step
  double tol = 1e-8;    ///< gradient max-norm stopping threshold
};

struct MinimizeResult {
  RotationCurve curve;
  std::vector<double> energy_trace;  ///< accepted iterates, non-increasing
  bool converged;
  int iterations;
  double grad_norm;
};

/// Riemannian gradient descent with exponential-map updates and Armijo
/// backtracking (contraction 0.5, slope 1e-4); the trial step is warm-started
/// from a Barzilai-Borwein estimate and never accepted without decrease.
MinimizeResult minimize(const RotationCurve& curve0, const RodCoefficients& rc,
                        double f, const BoundaryCondition& bc,
                        const MinimizeOptions& opts = {});

}  // namespace rodstab

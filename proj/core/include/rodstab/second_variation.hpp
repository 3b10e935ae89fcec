#pragma once

#include "rodstab/cross_section.hpp"
#include "rodstab/rotation_curve.hpp"

namespace rodstab {

/// P1 discretization of the straight-configuration second variation
///   F^f(w) = int <C w', w'> - c13 k (w1 w3' - w1' w3) + f (w2^2 + w3^2)
/// on the test space of the boundary condition. Only ClampedClamped and
/// WeakClamped admit the straight critical point; others are rejected.
///
/// With midpoint-log strains the matrix is the exact Hessian of the discrete
/// energy along left-exponential families, which requires the trapezoidal
/// (lumped) mass in the force block; K(f) = K(0) + f * Mask holds exactly.
class SecondVariation {
 public:
  SecondVariation(const RodCoefficients& rc, double length_L,
                  const BoundaryCondition& bc, int segments);

  int dofs() const { return ndof_; }
  int segments() const { return segments_; }

  Eigen::MatrixXd matrix(double f) const;  ///< dense K(f)
  Eigen::MatrixXd mask() const;            ///< dense Mask (f-slope)

  /// Positive-definiteness of K(f) via banded LDL^T (no eigensolve).
  bool positive_definite(double f) const;

  double smallest_eigenvalue(double f) const;

  /// Node/component to dof index, -1 when constrained to zero.
  int dof(int node, int comp) const { return index_[3 * node + comp]; }

 private:
  void assemble();

  double length_;
  int segments_;
  int ndof_;
  BoundaryCondition::Kind kind_;
  Vec3 cdiag_;  // (c23, c13, c12)
  double c13k_;
  std::vector<int> index_;
  // symmetric band storage, diagonal + 5 sub-diagonals
  static constexpr int kBand = 5;
  Eigen::MatrixXd band0_;      // K(0)
  Eigen::VectorXd mask_diag_;  // lumped mass on the w2/w3 dofs
};

struct KernelCheck {
  int kernel_dim;
  double kernel_match_error;  ///< angle to the analytic bifurcation kernel
  double f_crit;
};

/// Eigen-decomposition of K(f_crit) in the weak-clamped regime: counts the
/// near-zero eigenvalues (|lambda| <= 1e-6 ||K||) and measures the angle
/// between the near-kernel eigenvector and the sampled analytic kernel.
KernelCheck bifurcation_kernel_check(const RodCoefficients& rc, double length_L,
                                     int segments);

}  // namespace rodstab

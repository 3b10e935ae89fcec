#pragma once

#include <array>
#include <string>
#include <vector>

#include "rodstab/cross_section.hpp"
#include "rodstab/types.hpp"

namespace rodstab {

/// Constant-coefficient Jacobi system C xi'' = (D - D^T) xi' + B xi of a
/// helical critical point, and its first-order companion matrix Gamma.
struct SecondOrderSystem {
  Mat3 Cmat;   ///< diag(c23, c13, c12)
  Mat3 D;      ///< Omega/2 - A C
  Mat3 B;      ///< symmetric
  Mat6 Gamma;  ///< [[0, I], [C^-1 B, C^-1 (D - D^T)]]
};

/// Assemble D, B, Gamma at the strain omega with tangent direction
/// r = R(0)^T e1 under the terminal load f.
SecondOrderSystem assemble_system(const Vec3& omega, const Vec3& r,
                                  const RodCoefficients& rc, double f);

/// M(t): columns are the Jacobi solutions with xi(0) = 0, xi'(0) = e_i;
/// equals the upper-right 3x3 block of exp(Gamma t).
Mat3 fundamental_matrix(const SecondOrderSystem& sys, double t);

/// Moduli of the three eigenvalues of a real 3x3 matrix via the closed-form
/// cubic; returns them sorted ascending.
std::array<double, 3> eigenvalue_moduli(const Mat3& M);

enum class Verdict { Stable, Unstable, Marginal };
const char* verdict_name(Verdict v);

struct StabilityReport {
  std::vector<double> ts;
  std::vector<double> delta_vals;  ///< smallest |eigenvalue| of M(t)
  std::vector<double> det_vals;    ///< det M(t)
  std::vector<double> sigma_min;   ///< smallest singular value of M(t)
  std::vector<double> conjugate_points;
  Verdict verdict;
  std::vector<std::string> flags;  ///< e.g. "stiff" when ||Gamma|| L > 500
};

struct ScanOptions {
  int n_samples = 512;
  double t_min_frac = 1e-3;
  double eig_tol = 1e-8;  ///< on det M / t^3, median-normalized
};

/// Samples (0, L], locates conjugate points as sign changes of det M(t)
/// (bisection-refined to 1e-10 L); a dip of the normalized determinant below
/// eig_tol without a sign change yields a Marginal verdict.
StabilityReport scan(const SecondOrderSystem& sys, double L,
                     const ScanOptions& opts = {});

/// Max scaled residual of the ODE when the exponential-based solutions are
/// differentiated by central differences.
double ode_residual_check(const SecondOrderSystem& sys,
                          const std::vector<double>& t_samples);

/// P1 stiffness matrix of the Dirichlet second variation
/// int <C xi', xi'> + <xi, (D - D^T) xi'> + <B xi, xi> on (0, L).
Eigen::MatrixXd dirichlet_second_variation(const SecondOrderSystem& sys,
                                           double L, int segments);

}  // namespace rodstab

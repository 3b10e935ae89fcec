#pragma once

#include <optional>
#include <utility>

#include "rodstab/cross_section.hpp"
#include "rodstab/rotation_curve.hpp"

namespace rodstab {

/// g1(x) = (x - a x^3) sin x + 2 (cos x - 1)
/// g2(x) = (x - a x^3) (cos x + 1) - 2 sin x
std::pair<double, double> g_functions(double x, double a);

/// The unique common zero of g1, g2 in (pi, 2pi). Exists iff 1 - 4 pi^2 a < 0;
/// found by bisection on g2 to 1e-12, with |g1(x*)| verified small.
std::optional<double> find_x_star(double a);

enum class CriticalBranch { TwoPi, XStar, Weak, Torsional };

const char* branch_name(CriticalBranch b);

struct CriticalForceBreakdown {
  double f1_crit;
  double f2_crit;  ///< always -pi^2 c13 / L^2
  double f_crit;   ///< max(f1_crit, f2_crit)
  CriticalBranch branch;
  std::optional<double> x_star;
  double a_param;  ///< c12 c23 / (c13 k L)^2; +inf when k = 0
};

/// Closed-form critical force of the straight configuration.
/// bc must be ClampedClamped with identity end frames, or WeakClamped.
CriticalForceBreakdown f_crit_analytic(const RodCoefficients& rc,
                                       const BoundaryCondition& bc);

/// Sign-change point in f of the smallest eigenvalue of the discretized
/// second variation, located by bisection inside [bracket_lo, bracket_hi].
double f_crit_numeric(const RodCoefficients& rc, const BoundaryCondition& bc,
                      int segments, double bracket_lo, double bracket_hi);

/// Same, with the default bracket centered on the analytic value.
double f_crit_numeric(const RodCoefficients& rc, const BoundaryCondition& bc,
                      int segments);

}  // namespace rodstab

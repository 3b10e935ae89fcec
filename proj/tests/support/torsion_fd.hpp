#pragma once

namespace rodstab::testing {

/// Independent torsional-rigidity oracle: finite-difference solve of the
/// Neumann torsion problem on an n x n grid over the rectangle, then
/// quadrature of the torsion-constant integral.
double torsional_rigidity_fd(double wy, double wz, int n);

}  // namespace rodstab::testing

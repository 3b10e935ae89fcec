#pragma once

#include <optional>

#include "rodstab/cross_section.hpp"
#include "rodstab/rotation_curve.hpp"

namespace rodstab {

/// Near-straight helical stationary point: R(x) = R0 exp(hat(omega) x) with
/// omega = theta * r, r = R(0)^T e1 = (1-delta) e1 + sqrt(2 delta - delta^2) e2.
struct HelixSpec {
  double delta;
  double theta;
  Vec3 r;
  Mat3 R0;
  Vec3 omega;
  double f;
  double length_L;

  Mat3 frame_at(double x) const;
  RotationCurve sample(int segments) const;
};

/// Real root of the stationarity polynomial
///   p_delta(theta) = (c23 - c13) s (1-delta) theta^2
///                  + c13 k (1-delta) theta - f s,   s = sqrt(2 delta - delta^2),
/// with the smaller absolute value, evaluated with the stable q-formula.
double theta_root(const RodCoefficients& rc, double f, double delta);

HelixSpec build_helix(const RodCoefficients& rc, double f, double delta,
                      double length_L);

/// Rows of the algebraic stationarity system at a strain omega; a stationary
/// helix satisfies rows = (0, 0, -f sqrt(2 delta - delta^2)).
Vec3 algebraic_rows(const RodCoefficients& rc, const Vec3& omega);

/// The f = 0 helix family of constant strain: a13 = -c13 k / (c23 - c13) with
/// the twist a23 free; absent when c13 = c23.
struct HelixF0 {
  double a13;
  /// Strain for a chosen free twist component a23 (omega = (-a23, a13, 0)).
  Vec3 omega(double a23) const { return Vec3(-a23, a13, 0.0); }
};

std::optional<HelixF0> helix_f0(const RodCoefficients& rc);

}  // namespace rodstab

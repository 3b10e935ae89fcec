#include "rodstab/helix.hpp"

#include <cmath>

#include "rodstab/so3.hpp"

namespace rodstab {

Mat3 HelixSpec::frame_at(double x) const { return R0 * exp_skew(omega, x); }

RotationCurve HelixSpec::sample(int segments) const {
  std::vector<Mat3> frames;
  frames.reserve(segments + 1);
  for (int i = 0; i <= segments; ++i)
    frames.push_back(frame_at(length_L * i / segments));
  return RotationCurve(std::move(frames), length_L);
}

double theta_root(const RodCoefficients& rc, double f, double delta) {
  if (f == 0.0) throw ZeroForce("theta_root: f must be nonzero");
  if (rc.k == 0.0)
    throw std::invalid_argument("theta_root: needs intrinsic curvature k != 0");
  if (!(delta >= 1e-8 && delta <= 0.5))
    throw std::invalid_argument("theta_root: delta outside [1e-8, 0.5]");

  const double s = std::sqrt(2.0 * delta - delta * delta);
  const double a2 = (rc.c23 - rc.c13) * s * (1.0 - delta);
  const double a1 = rc.c13 * rc.k * (1.0 - delta);
  const double a0 = -f * s;

  if (std::abs(a2) <= 1e-14 * std::abs(a1)) return -a0 / a1;

  const double disc = a1 * a1 - 4.0 * a2 * a0;
  if (disc < 0.0)
    throw NoRealRoot("theta_root: stationarity polynomial has complex roots");
  const double q = -0.5 * (a1 + std::copysign(std::sqrt(disc), a1));
  const double r1 = q / a2;
  const double r2 = a0 / q;
  return std::abs(r1) < std::abs(r2) ? r1 : r2;
}

HelixSpec build_helix(const RodCoefficients& rc, double f, double delta,
                      double length_L) {
  HelixSpec hs;
  hs.delta = delta;
  hs.theta = theta_root(rc, f, delta);
  hs.r = Vec3(1.0 - delta, std::sqrt(2.0 * delta - delta * delta), 0.0);
  hs.R0 = frame_with_first_row(hs.r);
  hs.omega = hs.theta * hs.r;
  hs.f = f;
  hs.length_L = length_L;
  return hs;
}

Vec3 algebraic_rows(const RodCoefficients& rc, const Vec3& omega) {
  const double a12 = -omega.z();
  const double a13 = omega.y();
  const double a23 = -omega.x();
  return Vec3(a12 * (rc.c13 * (a13 - rc.k) - rc.c12 * a13),
              (rc.c23 - rc.c12) * a12 * a23,
              a23 * (rc.c23 * a13 - rc.c13 * (a13 - rc.k)));
}

std::optional<HelixF0> helix_f0(const RodCoefficients& rc) {
  const double denom = rc.c23 - rc.c13;
  if (std::abs(denom) <= 1e-12 * std::max(rc.c13, rc.c23)) return std::nullopt;
  return HelixF0{-rc.c13 * rc.k / denom};
}

}  // namespace rodstab

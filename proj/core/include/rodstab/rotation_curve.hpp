#pragma once

#include <iosfwd>
#include <optional>
#include <vector>

#include "rodstab/types.hpp"

namespace rodstab {

/// Clamping regime of the rod ends. The variant fixes the admissible
/// perturbation space: WeakFree leaves every frame free; Clamped pins R(0);
/// ClampedClamped pins both end frames; WeakClamped pins only the tangent
/// direction R e1 = e1 at both ends.
struct BoundaryCondition {
  enum class Kind { WeakFree, Clamped, ClampedClamped, WeakClamped };

  Kind kind = Kind::WeakFree;
  Mat3 R0 = Mat3::Identity();
  Mat3 RL = Mat3::Identity();

  static BoundaryCondition weak_free();
  static BoundaryCondition clamped(const Mat3& R0);
  static BoundaryCondition clamped_clamped(const Mat3& R0, const Mat3& RL);
  static BoundaryCondition weak_clamped();

  /// Max violation of the boundary constraints by the end frames.
  double violation(const Mat3& first, const Mat3& last) const;

  const char* name() const;
};

/// Uniformly sampled frame field R(x_i), x_i = i L / N, i = 0..N.
class RotationCurve {
 public:
  RotationCurve(std::vector<Mat3> samples, double length_L);

  int segments() const { return static_cast<int>(samples_.size()) - 1; }
  double length() const { return length_; }
  double h() const { return length_ / segments(); }
  const Mat3& frame(int i) const { return samples_[i]; }
  Mat3& frame(int i) { return samples_[i]; }
  const std::vector<Mat3>& frames() const { return samples_; }

  static RotationCurve straight(int segments, double length_L);

 private:
  std::vector<Mat3> samples_;
  double length_;
};

/// Body-frame angular strain at segment midpoints,
/// omega_j = vee(log(R_j^T R_{j+1})) / h.
struct StrainField {
  std::vector<Vec3> omegas;
  double h;
};

StrainField strains(const RotationCurve& curve);

/// CSV with header x,r11,...,r33 (row-major), one node per line.
void write_curve_csv(std::ostream& os, const RotationCurve& curve);
RotationCurve read_curve_csv(std::istream& is);

}  // namespace rodstab

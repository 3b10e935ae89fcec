#include "rodstab/rotation_curve.hpp"

#include <charconv>
#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>

#include "rodstab/so3.hpp"

namespace rodstab {

BoundaryCondition BoundaryCondition::weak_free() { return {}; }

BoundaryCondition BoundaryCondition::clamped(const Mat3& R0) {
  BoundaryCondition bc;
  bc.kind = Kind::Clamped;
  bc.R0 = R0;
  return bc;
}

BoundaryCondition BoundaryCondition::clamped_clamped(const Mat3& R0,
                                                     const Mat3& RL) {
  BoundaryCondition bc;
  bc.kind = Kind::ClampedClamped;
  bc.R0 = R0;
  bc.RL = RL;
  return bc;
}

BoundaryCondition BoundaryCondition::weak_clamped() {
  BoundaryCondition bc;
  bc.kind = Kind::WeakClamped;
  return bc;
}

double BoundaryCondition::violation(const Mat3& first, const Mat3& last) const {
  const Vec3 e1(1.0, 0.0, 0.0);
  switch (kind) {
    case Kind::WeakFree:
      return 0.0;
    case Kind::Clamped:
      return (first - R0).cwiseAbs().maxCoeff();
    case Kind::ClampedClamped:
      return std::max((first - R0).cwiseAbs().maxCoeff(),
                      (last - RL).cwiseAbs().maxCoeff());
    case Kind::WeakClamped:
      return std::max((first * e1 - e1).norm(), (last * e1 - e1).norm());
  }
  return 0.0;
}

const char* BoundaryCondition::name() const {
  switch (kind) {
    case Kind::WeakFree: return "weak-free";
    case Kind::Clamped: return "clamped";
    case Kind::ClampedClamped: return "clamped-clamped";
    case Kind::WeakClamped: return "weak-clamped";
  }
  return "?";
}

RotationCurve::RotationCurve(std::vector<Mat3> samples, double length_L)
    : samples_(std::move(samples)), length_(length_L) {
  if (samples_.size() < 5)
    throw std::invalid_argument("RotationCurve needs at least N = 4 segments");
  if (!(length_ > 0.0))
    throw std::invalid_argument("RotationCurve length must be positive");
  for (const Mat3& R : samples_)
    if (!is_rotation(R, 1e-6))
      throw std::invalid_argument("RotationCurve sample is not a rotation");
}

RotationCurve RotationCurve::straight(int segments, double length_L) {
  return RotationCurve(std::vector<Mat3>(segments + 1, Mat3::Identity()),
                       length_L);
}

StrainField strains(const RotationCurve& curve) {
  const int N = curve.segments();
  const double h = curve.h();
  StrainField sf;
  sf.h = h;
  sf.omegas.reserve(N);
  for (int j = 0; j < N; ++j) {
    const Mat3 P = curve.frame(j).transpose() * curve.frame(j + 1);
    // cos(angle) < 0 means the relative rotation exceeds pi/2
    if (0.5 * (P.trace() - 1.0) < -1e-12)
      throw FrameJump("strains: consecutive frames differ by more than pi/2");
    sf.omegas.push_back(log_rotation(P) / h);
  }
  return sf;
}

namespace {
void put_double(std::ostream& os, double v) {
  char buf[40];
  auto res = std::to_chars(buf, buf + sizeof buf, v,
                           std::chars_format::general, 17);
  os.write(buf, res.ptr - buf);
}
}  // namespace

void write_curve_csv(std::ostream& os, const RotationCurve& curve) {
  os << "x,r11,r12,r13,r21,r22,r23,r31,r32,r33\n";
  const int N = curve.segments();
  for (int i = 0; i <= N; ++i) {
    put_double(os, curve.length() * i / N);
    const Mat3& R = curve.frame(i);
    for (int r = 0; r < 3; ++r)
      for (int c = 0; c < 3; ++c) {
        os << ',';
        put_double(os, R(r, c));
      }
    os << '\n';
  }
}

RotationCurve read_curve_csv(std::istream& is) {
  std::string line;
  if (!std::getline(is, line))
    throw std::invalid_argument("curve CSV: missing header");
  std::vector<Mat3> frames;
  double last_x = 0.0;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    std::stringstream ss(line);
    std::string cell;
    double vals[10];
    for (int i = 0; i < 10; ++i) {
      if (!std::getline(ss, cell, ','))
        throw std::invalid_argument("curve CSV: short row");
      vals[i] = std::stod(cell);
    }
    last_x = vals[0];
    Mat3 R;
    for (int r = 0; r < 3; ++r)
      for (int c = 0; c < 3; ++c) R(r, c) = vals[1 + 3 * r + c];
    frames.push_back(R);
  }
  return RotationCurve(std::move(frames), last_x);
}

}  // namespace rodstab

#pragma once

#include <Eigen/Dense>
#include <stdexcept>
#include <string>

namespace rodstab {

using Vec3 = Eigen::Vector3d;
using Mat3 = Eigen::Matrix3d;
using Mat6 = Eigen::Matrix<double, 6, 6>;

// Thrown on inputs that violate a documented precondition in a way the
// caller may want to branch on. Plain std::invalid_argument is used for
// outright malformed arguments (negative widths, too-short curves, ...).
struct AngleNearPi : std::domain_error {
  using std::domain_error::domain_error;
};
struct SingularInput : std::domain_error {
  using std::domain_error::domain_error;
};
struct DegenerateAxis : std::domain_error {
  using std::domain_error::domain_error;
};
struct FrameJump : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct BcViolation : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct UnsupportedBc : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct RootNotBracketed : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct BracketFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NoRealRoot : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct ZeroForce : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct DegenerateCase : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace rodstab

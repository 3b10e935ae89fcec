#include "rodstab/so3.hpp"

#include <cmath>

namespace rodstab {

Mat3 hat(const Vec3& w) {
  Mat3 A;
  A << 0.0, -w.z(), w.y(), w.z(), 0.0, -w.x(), -w.y(), w.x(), 0.0;
  return A;
}

Vec3 vee(const Mat3& A) { return Vec3(A(2, 1), A(0, 2), A(1, 0)); }

bool is_rotation(const Mat3& R, double tol) {
  return (R.transpose() * R - Mat3::Identity()).cwiseAbs().maxCoeff() <= tol &&
         std::abs(R.determinant() - 1.0) <= tol;
}

Mat3 exp_skew(const Vec3& w, double t) {
  const Vec3 v = w * t;
  const double th = v.norm();
  const Mat3 W = hat(v);
  if (th < 1e-8) {
    // exp = I + W + W^2/2 is exact to O(th^3); enough below the cutoff
    return Mat3::Identity() + W + 0.5 * W * W;
  }
  return Mat3::Identity() + std::sin(th) / th * W +
         (1.0 - std::cos(th)) / (th * th) * W * W;
}

Vec3 log_rotation(const Mat3& R) {
  const Vec3 s = 0.5 * vee(R - R.transpose());
  const double c = 0.5 * (R.trace() - 1.0);
  const double th = std::atan2(s.norm(), c);
  if (th >= M_PI - 1e-6)
    throw AngleNearPi("log_rotation: rotation angle within 1e-6 of pi");
  if (th < 1e-8) return s;  // sin th ~ th, relative error O(th^2)
  return th / std::sin(th) * s;
}

Mat3 polar_project(const Mat3& M) {
  if (M.determinant() <= 1e-12)
    throw SingularInput("polar_project: det(M) <= 1e-12");
  Eigen::JacobiSVD<Mat3> svd(M, Eigen::ComputeFullU | Eigen::ComputeFullV);
  Mat3 U = svd.matrixU();
  Mat3 V = svd.matrixV();
  if ((U * V.transpose()).determinant() < 0.0) {
    U.col(2) *= -1.0;
  }
  return U * V.transpose();
}

Mat3 frame_with_first_row(const Vec3& r) {
  if (std::abs(r.norm() - 1.0) > 1e-10)
    throw std::invalid_argument("frame_with_first_row: r must be unit");
  const Vec3 e1(1.0, 0.0, 0.0);
  if ((r + e1).norm() < 1e-8)
    throw DegenerateAxis("frame_with_first_row: r = -e1 has no continuous frame");
  const Vec3 axis = e1.cross(r);
  const double s = axis.norm();
  if (s < 1e-14) return Mat3::Identity();
  const double angle = std::atan2(s, r.x());
  // R^T = exp(angle * hat(axis/s)) maps e1 to r; return its transpose.
  return exp_skew(axis / s, angle).transpose();
}

Mat3 right_jacobian_inverse(const Vec3& theta) {
  const double th = theta.norm();
  const Mat3 W = hat(theta);
  double c;
  if (th < 1e-4) {
    const double t2 = th * th;
    c = 1.0 / 12.0 + t2 / 720.0 + t2 * t2 / 30240.0;
  } else {
    c = 1.0 / (th * th) -
        (1.0 + std::cos(th)) / (2.0 * th * std::sin(th));
  }
  return Mat3::Identity() + 0.5 * W + c * W * W;
}

}  // namespace rodstab

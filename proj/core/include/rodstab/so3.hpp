#pragma once

#include "rodstab/types.hpp"

namespace rodstab {

/// Skew matrix of w under the convention hat(w) v = w x v,
/// so a12 = -w3, a13 = w2, a23 = -w1.
Mat3 hat(const Vec3& w);

/// Axial vector, inverse of hat on skew-symmetric matrices.
Vec3 vee(const Mat3& A);

/// True if R^T R = I and det R = 1 within tol.
bool is_rotation(const Mat3& R, double tol = 1e-10);

/// Rodrigues formula for exp(hat(w) * t).
Mat3 exp_skew(const Vec3& w, double t = 1.0);

/// Rotation logarithm as axis*angle. Rejects angles within 1e-6 of pi.
Vec3 log_rotation(const Mat3& R);

/// Orthogonal polar factor of M (det M > 0), via SVD with sign correction.
Mat3 polar_project(const Mat3& M);

/// A rotation R with R^T e1 = r, acting in the plane spanned by e1 and r.
/// r must be unit; r = -e1 has no continuous choice and is rejected.
Mat3 frame_with_first_row(const Vec3& r);

/// Inverse of the right Jacobian of exp at Theta:
/// J_r^{-1}(Theta) = I + hat(Theta)/2 + c(|Theta|) hat(Theta)^2.
Mat3 right_jacobian_inverse(const Vec3& theta);

}  // namespace rodstab

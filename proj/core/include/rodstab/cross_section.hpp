#pragma once

#include "rodstab/types.hpp"

namespace rodstab {

/// Isotropic material, Lame constants in a common pressure unit.
/// With normalize_by_mu set (the default), the rod coefficients are the
/// physical ones divided by mu.
struct MaterialParams {
  double lame_lambda = 0.326;
  double lame_mu = 0.654e-3;
  bool normalize_by_mu = true;

  void validate() const;
};

/// Rectangle (-w_y, w_y) x (-w_z, w_z) of unit area; w_z is the free
/// parameter, w_y = 1/(4 w_z) is derived.
class CrossSection {
 public:
  explicit CrossSection(double w_z);

  double wy() const { return wy_; }
  double wz() const { return wz_; }

 private:
  double wy_;
  double wz_;
};

struct SectionMoments {
  double m2;      ///< integral of x2^2 over S
  double m3;      ///< integral of x3^2 over S
  double s3plus;  ///< integral of x3 over the upper layer S+
};

SectionMoments second_moments(const CrossSection& cs);

/// Partial sum (n_terms terms) of the torsional-rigidity series for the
/// rectangle. Monotone decreasing in n_terms; terms decay like (2n+1)^-5.
double torsional_rigidity(const CrossSection& cs, int n_terms = 32);

/// k = chi * s3plus / m3; reduces to 3 chi / (4 w_z) for the rectangle.
double intrinsic_curvature(const CrossSection& cs, double chi);

/// Limit-model constants of the one-dimensional energy density
/// c12 a12^2 + c13 (a13 - k)^2 + c23 a23^2.
struct RodCoefficients {
  double c12;
  double c13;
  double c23;
  double tau_s;
  double k;
  double chi;
  double length_L;

  /// diag(c23, c13, c12), the Hessian (over 2) of the density in the
  /// axial-vector coordinates.
  Mat3 cmat() const {
    return Vec3(c23, c13, c12).asDiagonal();
  }

  void validate() const;
};

RodCoefficients build_coefficients(const MaterialParams& mp,
                                   const CrossSection& cs, double chi,
                                   double length_L, int n_terms = 32);

}  // namespace rodstab

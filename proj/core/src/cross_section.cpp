#include "rodstab/cross_section.hpp"

#include <cmath>

namespace rodstab {

void MaterialParams::validate() const {
  if (!(lame_mu > 0.0)) throw std::invalid_argument("lame_mu must be > 0");
  if (!(lame_lambda >= 0.0))
    throw std::invalid_argument("lame_lambda must be >= 0");
  if (!std::isfinite(lame_lambda) || !std::isfinite(lame_mu))
    throw std::invalid_argument("Lame constants must be finite");
}

CrossSection::CrossSection(double w_z) : wy_(0.0), wz_(w_z) {
  if (!(w_z > 0.0) || !std::isfinite(w_z))
    throw std::invalid_argument("w_z must be positive and finite");
  wy_ = 1.0 / (4.0 * w_z);
}

SectionMoments second_moments(const CrossSection& cs) {
  const double wy = cs.wy(), wz = cs.wz();
  return {4.0 / 3.0 * wy * wy * wy * wz, 4.0 / 3.0 * wy * wz * wz * wz,
          wy * wz * wz};
}

namespace {
double tanh_guarded(double x) { return x > 20.0 ? 1.0 : std::tanh(x); }
}  // namespace

double torsional_rigidity(const CrossSection& cs, int n_terms) {
  if (n_terms < 1) throw std::invalid_argument("n_terms must be >= 1");
  const double wy = cs.wy(), wz = cs.wz();
  const double pi = M_PI;
  double sum = 0.0;
  for (int n = 0; n < n_terms; ++n) {
    const double odd = 2.0 * n + 1.0;
    const double zeta = odd * pi / (2.0 * wz);
    sum += tanh_guarded(zeta * wy) / std::pow(odd, 5);
  }
  return 16.0 * wy * wz * wz * wz *
         (1.0 / 3.0 - 64.0 * wz / (std::pow(pi, 5) * wy) * sum);
}

double intrinsic_curvature(const CrossSection& cs, double chi) {
  if (!(chi >= 0.0)) throw std::invalid_argument("chi must be >= 0");
  const SectionMoments m = second_moments(cs);
  return chi * m.s3plus / m.m3;
}

void RodCoefficients::validate() const {
  if (!(c12 > 0.0 && c13 > 0.0 && c23 > 0.0 && tau_s > 0.0))
    throw std::invalid_argument("rod coefficients must be positive");
  if (!(length_L > 0.0)) throw std::invalid_argument("length must be positive");
  if ((k == 0.0) != (chi == 0.0))
    throw std::invalid_argument("k and chi must vanish together");
}

RodCoefficients build_coefficients(const MaterialParams& mp,
                                   const CrossSection& cs, double chi,
                                   double length_L, int n_terms) {
  mp.validate();
  const SectionMoments m = second_moments(cs);
  const double factor =
      mp.lame_mu * (3.0 * mp.lame_lambda + 2.0 * mp.lame_mu) /
      (mp.lame_lambda + mp.lame_mu);
  const double tau = torsional_rigidity(cs, n_terms);
  RodCoefficients rc;
  rc.c12 = factor * m.m2;
  rc.c13 = factor * m.m3;
  rc.c23 = mp.lame_mu * tau;
  rc.tau_s = tau;
  rc.k = intrinsic_curvature(cs, chi);
  rc.chi = chi;
  rc.length_L = length_L;
  if (mp.normalize_by_mu) {
    rc.c12 /= mp.lame_mu;
    rc.c13 /= mp.lame_mu;
    rc.c23 /= mp.lame_mu;
  }
  rc.validate();
  return rc;
}

}  // namespace rodstab

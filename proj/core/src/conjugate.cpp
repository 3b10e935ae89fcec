#include "rodstab/conjugate.hpp"

#include <algorithm>
#include <cmath>
#include <complex>

#include "rodstab/expm.hpp"
#include "rodstab/so3.hpp"

namespace rodstab {

SecondOrderSystem assemble_system(const Vec3& omega, const Vec3& r,
                                  const RodCoefficients& rc, double f) {
  if (std::abs(r.norm() - 1.0) > 1e-10)
    throw std::invalid_argument("assemble_system: r must be unit");
  const Mat3 C = rc.cmat();
  const Mat3 A = hat(omega);
  const Mat3 Om = hat(C * (omega - rc.k * Vec3::UnitY()));

  SecondOrderSystem sys;
  sys.Cmat = C;
  sys.D = 0.5 * Om - A * C;
  sys.B = A.transpose() * C * A + 0.5 * (Om * A + A * Om);
  sys.B(1, 1) += f * r.x();
  sys.B(2, 2) += f * r.x();
  sys.B(0, 1) -= 0.5 * f * r.y();
  sys.B(1, 0) -= 0.5 * f * r.y();

  const Mat3 Ci = Vec3(1.0 / rc.c23, 1.0 / rc.c13, 1.0 / rc.c12).asDiagonal();
  sys.Gamma.setZero();
  sys.Gamma.block<3, 3>(0, 3) = Mat3::Identity();
  sys.Gamma.block<3, 3>(3, 0) = Ci * sys.B;
  sys.Gamma.block<3, 3>(3, 3) = Ci * (sys.D - sys.D.transpose());
  return sys;
}

Mat3 fundamental_matrix(const SecondOrderSystem& sys, double t) {
  if (t < 0.0) throw std::invalid_argument("fundamental_matrix: t >= 0");
  const Eigen::MatrixXd E = expm(sys.Gamma * t);
  return E.block<3, 3>(0, 3);
}

std::array<double, 3> eigenvalue_moduli(const Mat3& M) {
  // characteristic polynomial l^3 - c2 l^2 + c1 l - c0
  const double c2 = M.trace();
  const double c1 = 0.5 * (c2 * c2 - (M * M).trace());
  const double c0 = M.determinant();
  // depressed cubic y^3 + p y + q with l = y + c2/3
  const double p = c1 - c2 * c2 / 3.0;
  const double q = -2.0 * c2 * c2 * c2 / 27.0 + c2 * c1 / 3.0 - c0;
  const std::complex<double> disc =
      std::sqrt(std::complex<double>(q * q / 4.0 + p * p * p / 27.0));
  std::complex<double> u = std::pow(-q / 2.0 + disc, 1.0 / 3.0);
  if (std::abs(u) < 1e-300) u = std::pow(-q / 2.0 - disc, 1.0 / 3.0);
  std::array<double, 3> out;
  if (std::abs(u) < 1e-300) {
    out.fill(std::abs(c2) / 3.0);
    std::sort(out.begin(), out.end());
    return out;
  }
  const std::complex<double> w(-0.5, std::sqrt(3.0) / 2.0);
  for (int i = 0; i < 3; ++i) {
    const std::complex<double> ui = u * std::pow(w, i);
    out[i] = std::abs(ui - p / (3.0 * ui) + c2 / 3.0);
  }
  std::sort(out.begin(), out.end());
  return out;
}

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Stable: return "stable";
    case Verdict::Unstable: return "unstable";
    case Verdict::Marginal: return "marginal";
  }
  return "?";
}

namespace {
double det_at(const SecondOrderSystem& sys, double t) {
  return fundamental_matrix(sys, t).determinant();
}
}  // namespace

StabilityReport scan(const SecondOrderSystem& sys, double L,
                     const ScanOptions& opts) {
  if (opts.n_samples < 16)
    throw std::invalid_argument("scan: n_samples >= 16");
  StabilityReport rep;
  const double t0 = opts.t_min_frac * L;
  const int n = opts.n_samples;
  rep.ts.resize(n);
  rep.delta_vals.resize(n);
  rep.det_vals.resize(n);
  rep.sigma_min.resize(n);
  std::vector<double> detn(n);
  for (int i = 0; i < n; ++i) {
    const double t = t0 + (L - t0) * i / (n - 1);
    const Mat3 M = fundamental_matrix(sys, t);
    rep.ts[i] = t;
    rep.det_vals[i] = M.determinant();
    rep.delta_vals[i] = eigenvalue_moduli(M)[0];
    Eigen::JacobiSVD<Mat3> svd(M);
    rep.sigma_min[i] = svd.singularValues()(2);
    detn[i] = rep.det_vals[i] / (t * t * t);
  }

  for (int i = 0; i + 1 < n; ++i) {
    if (rep.det_vals[i] == 0.0) {
      rep.conjugate_points.push_back(rep.ts[i]);
      continue;
    }
    if (rep.det_vals[i] * rep.det_vals[i + 1] < 0.0) {
      double lo = rep.ts[i], hi = rep.ts[i + 1];
      const bool neg_lo = rep.det_vals[i] < 0.0;
      while (hi - lo > 1e-10 * L) {
        const double mid = 0.5 * (lo + hi);
        if ((det_at(sys, mid) < 0.0) == neg_lo)
          lo = mid;
        else
          hi = mid;
      }
      rep.conjugate_points.push_back(0.5 * (lo + hi));
    }
  }

  std::vector<double> mags;
  mags.reserve(n);
  for (double d : detn) mags.push_back(std::abs(d));
  std::nth_element(mags.begin(), mags.begin() + n / 2, mags.end());
  const double median = std::max(mags[n / 2], 1e-300);
  double min_norm = std::numeric_limits<double>::max();
  for (double d : detn) min_norm = std::min(min_norm, std::abs(d) / median);

  if (!rep.conjugate_points.empty())
    rep.verdict = Verdict::Unstable;
  else if (min_norm < opts.eig_tol) {
    rep.verdict = Verdict::Marginal;
    for (int i = 0; i < n; ++i)
      if (std::abs(detn[i]) / median < opts.eig_tol)
        rep.conjugate_points.push_back(rep.ts[i]);
  } else {
    rep.verdict = Verdict::Stable;
  }

  if (sys.Gamma.norm() * L > 500.0) rep.flags.push_back("stiff");
  return rep;
}

double ode_residual_check(const SecondOrderSystem& sys,
                          const std::vector<double>& t_samples) {
  const double h = 1e-4;
  const Mat3 Dsk = sys.D - sys.D.transpose();
  double worst = 0.0;
  for (double t : t_samples) {
    const Mat3 Mm = fundamental_matrix(sys, std::max(t - h, 0.0));
    const Mat3 M0 = fundamental_matrix(sys, t);
    const Mat3 Mp = fundamental_matrix(sys, t + h);
    const Mat3 Mdd = (Mp - 2.0 * M0 + Mm) / (h * h);
    const Mat3 Md = (Mp - Mm) / (2.0 * h);
    const Mat3 lhs = sys.Cmat * Mdd;
    const Mat3 rhs = Dsk * Md + sys.B * M0;
    const double scale = std::max({lhs.norm(), rhs.norm(), 1.0});
    worst = std::max(worst, (lhs - rhs).norm() / scale);
  }
  return worst;
}

Eigen::MatrixXd dirichlet_second_variation(const SecondOrderSystem& sys,
                                           double L, int segments) {
  const int N = segments;
  const double h = L / N;
  const int ndof = 3 * (N - 1);
  Eigen::MatrixXd K = Eigen::MatrixXd::Zero(ndof, ndof);
  const Mat3 Dsk = sys.D - sys.D.transpose();
  auto dof = [&](int node, int c) {
    return (node >= 1 && node <= N - 1) ? 3 * (node - 1) + c : -1;
  };
  // element integrals on P1: int phi_i phi_j = h/6 [[2,1],[1,2]],
  // int phi_i phi_j' = [[-1/2, 1/2], [-1/2, 1/2]]
  const double Mloc[2][2] = {{2.0 * h / 6.0, h / 6.0}, {h / 6.0, 2.0 * h / 6.0}};
  const double Sloc[2][2] = {{-0.5, 0.5}, {-0.5, 0.5}};
  const double Kloc[2][2] = {{1.0 / h, -1.0 / h}, {-1.0 / h, 1.0 / h}};
  for (int e = 0; e < N; ++e) {
    const int nodes[2] = {e, e + 1};
    for (int li = 0; li < 2; ++li)
      for (int lj = 0; lj < 2; ++lj)
        for (int ci = 0; ci < 3; ++ci)
          for (int cj = 0; cj < 3; ++cj) {
            const int di = dof(nodes[li], ci);
            const int dj = dof(nodes[lj], cj);
            if (di < 0 || dj < 0) continue;
            double v = 0.0;
            if (ci == cj) v += sys.Cmat(ci, ci) * Kloc[li][lj];
            v += Dsk(ci, cj) * Sloc[li][lj];
            v += sys.B(ci, cj) * Mloc[li][lj];
            K(di, dj) += v;
          }
  }
  return 0.5 * (K + K.transpose());
}

}  // namespace rodstab

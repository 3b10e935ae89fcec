#include "rodstab/second_variation.hpp"

#include <cmath>

#include <Eigen/Eigenvalues>

namespace rodstab {

SecondVariation::SecondVariation(const RodCoefficients& rc, double length_L,
                                 const BoundaryCondition& bc, int segments)
    : length_(length_L),
      segments_(segments),
      ndof_(0),
      kind_(bc.kind),
      cdiag_(rc.c23, rc.c13, rc.c12),
      c13k_(rc.c13 * rc.k) {
  if (segments < 4) throw std::invalid_argument("SecondVariation: N >= 4");
  if (kind_ != BoundaryCondition::Kind::ClampedClamped &&
      kind_ != BoundaryCondition::Kind::WeakClamped)
    throw UnsupportedBc(
        "second variation of the straight configuration exists only for "
        "clamped-clamped and weak-clamped ends");

  index_.assign(3 * (segments + 1), -1);
  for (int i = 0; i <= segments; ++i) {
    for (int c = 0; c < 3; ++c) {
      const bool end = (i == 0 || i == segments);
      bool free_dof;
      if (kind_ == BoundaryCondition::Kind::ClampedClamped)
        free_dof = !end;
      else  // weak-clamped: w2 = w3 = 0 at both ends, w1(0) = 0 as gauge
        free_dof = c == 0 ? (i > 0) : !end;
      if (free_dof) index_[3 * i + c] = ndof_++;
    }
  }
  assemble();
}

void SecondVariation::assemble() {
  const double h = length_ / segments_;
  band0_.setZero(kBand + 1, ndof_);
  mask_diag_.setZero(ndof_);

  auto add = [&](int di, int dj, double v) {
    if (di < 0 || dj < 0) return;
    if (di < dj) std::swap(di, dj);
    band0_(di - dj, dj) += v;
  };

  for (int e = 0; e < segments_; ++e) {
    const int a = e, b = e + 1;
    for (int c = 0; c < 3; ++c) {
      const double s = cdiag_[c] / h;
      add(dof(a, c), dof(a, c), s);
      add(dof(b, c), dof(b, c), s);
      add(dof(b, c), dof(a, c), -s);  // symmetric; stored once in the band
    }
    // -c13 k (w1 w3' - w1' w3) integrates elementwise to
    // -c13 k (u_a v_b - u_b v_a) with u = w1, v = w3
    add(dof(b, 2), dof(a, 0), -0.5 * c13k_);
    add(dof(a, 2), dof(b, 0), 0.5 * c13k_);
  }
  for (int i = 0; i <= segments_; ++i) {
    const double w = (i == 0 || i == segments_) ? 0.5 : 1.0;
    for (int c = 1; c < 3; ++c)
      if (dof(i, c) >= 0) mask_diag_[dof(i, c)] = h * w;
  }
}

Eigen::MatrixXd SecondVariation::matrix(double f) const {
  Eigen::MatrixXd K = Eigen::MatrixXd::Zero(ndof_, ndof_);
  for (int j = 0; j < ndof_; ++j) {
    K(j, j) = band0_(0, j) + f * mask_diag_[j];
    for (int b = 1; b <= kBand && j + b < ndof_; ++b) {
      K(j + b, j) = band0_(b, j);
      K(j, j + b) = band0_(b, j);
    }
  }
  return K;
}

Eigen::MatrixXd SecondVariation::mask() const {
  return mask_diag_.asDiagonal();
}

bool SecondVariation::positive_definite(double f) const {
  Eigen::MatrixXd W = band0_;
  W.row(0) += f * mask_diag_.transpose();
  // banded Cholesky; a nonpositive pivot means K(f) is not PD
  for (int j = 0; j < ndof_; ++j) {
    const double p = W(0, j);
    if (!(p > 0.0)) return false;
    const double l = std::sqrt(p);
    const int reach = std::min(kBand, ndof_ - 1 - j);
    for (int b = 1; b <= reach; ++b) W(b, j) /= l;
    for (int c = 1; c <= reach; ++c)
      for (int r = c; r <= reach; ++r)
        W(r - c, j + c) -= W(c, j) * W(r, j);
  }
  return true;
}

double SecondVariation::smallest_eigenvalue(double f) const {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(matrix(f),
                                                    Eigen::EigenvaluesOnly);
  return es.eigenvalues()(0);
}

KernelCheck bifurcation_kernel_check(const RodCoefficients& rc, double length_L,
                                     int segments) {
  const double L = length_L;
  const double pi2 = M_PI * M_PI;
  const double f1 = rc.c13 * rc.k * rc.c13 * rc.k / rc.c23 - pi2 * rc.c12 / (L * L);
  const double f2 = -pi2 * rc.c13 / (L * L);
  const double scale =
      std::max({std::abs(f1), std::abs(f2), pi2 * rc.c13 / (L * L)});
  if (std::abs(f1 - f2) <= 1e-10 * scale)
    throw DegenerateCase("bifurcation kernel is two-dimensional: f1 = f2");
  const double fcrit = std::max(f1, f2);

  SecondVariation sv(rc, L, BoundaryCondition::weak_clamped(), segments);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(sv.matrix(fcrit));
  const Eigen::VectorXd& ev = es.eigenvalues();
  const double knorm = ev.cwiseAbs().maxCoeff();

  int dim = 0;
  int kidx = 0;
  double best = std::numeric_limits<double>::max();
  for (int i = 0; i < ev.size(); ++i) {
    if (std::abs(ev[i]) <= 1e-6 * knorm) ++dim;
    if (std::abs(ev[i]) < best) {
      best = std::abs(ev[i]);
      kidx = i;
    }
  }

  Eigen::VectorXd analytic = Eigen::VectorXd::Zero(sv.dofs());
  for (int i = 0; i <= segments; ++i) {
    const double x = L * i / segments;
    Vec3 u;
    if (f1 > f2)
      u = Vec3(L * rc.c13 * rc.k * (1.0 - std::cos(M_PI * x / L)), 0.0,
               -M_PI * rc.c23 * std::sin(M_PI * x / L));
    else
      u = Vec3(0.0, std::sin(M_PI * x / L), 0.0);
    for (int c = 0; c < 3; ++c)
      if (sv.dof(i, c) >= 0) analytic[sv.dof(i, c)] = u[c];
  }
  const Eigen::VectorXd v = es.eigenvectors().col(kidx);
  const double cosang = std::min(
      1.0, std::abs(v.dot(analytic)) / (v.norm() * analytic.norm()));
  return {dim, std::acos(cosang), fcrit};
}

}  // namespace rodstab

#include "support/torsion_fd.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <stdexcept>

namespace rodstab::testing {

namespace {

// 5-point Laplacian with mirrored Neumann ghosts; boundary fluxes live in b.
struct TorsionGrid {
  int nx, ny;
  double hx, hy;
  Eigen::VectorXd x, y;

  int idx(int i, int j) const { return j * nx + i; }

  Eigen::VectorXd apply(const Eigen::VectorXd& phi) const {
    Eigen::VectorXd out(nx * ny);
    const double wx = 1.0 / (hx * hx), wy2 = 1.0 / (hy * hy);
    for (int j = 0; j < ny; ++j)
      for (int i = 0; i < nx; ++i) {
        const double c = phi[idx(i, j)];
        double v = 0.0;
        v += wx * ((i + 1 < nx ? phi[idx(i + 1, j)] : phi[idx(i - 1, j)]) - c);
        v += wx * ((i - 1 >= 0 ? phi[idx(i - 1, j)] : phi[idx(i + 1, j)]) - c);
        v += wy2 * ((j + 1 < ny ? phi[idx(i, j + 1)] : phi[idx(i, j - 1)]) - c);
        v += wy2 * ((j - 1 >= 0 ? phi[idx(i, j - 1)] : phi[idx(i, j + 1)]) - c);
        out[idx(i, j)] = -v;  // negated so the operator is PSD
      }
    return out;
  }
};

}  // namespace

double torsional_rigidity_fd(double wy, double wz, int n) {
  if (n < 8) throw std::invalid_argument("torsional_rigidity_fd: n >= 8");
  TorsionGrid g;
  g.nx = g.ny = n + 1;
  g.hx = 2.0 * wy / n;
  g.hy = 2.0 * wz / n;
  g.x.resize(g.nx);
  g.y.resize(g.ny);
  for (int i = 0; i < g.nx; ++i) g.x[i] = -wy + g.hx * i;
  for (int j = 0; j < g.ny; ++j) g.y[j] = -wz + g.hy * j;

  const int N = g.nx * g.ny;
  Eigen::VectorXd b = Eigen::VectorXd::Zero(N);
  // ghost substitution phi_ghost = phi_mirror + 2h * (outward derivative);
  // derivative data: d phi / dx2 = -x3 on x2 = +-wy, d phi / dx3 = x2 on
  // x3 = +-wz. Moved to the right-hand side (with the PSD sign flip).
  for (int j = 0; j < g.ny; ++j) {
    b[g.idx(g.nx - 1, j)] += 2.0 * (-g.y[j]) / g.hx;
    b[g.idx(0, j)] -= 2.0 * (-g.y[j]) / g.hx;
  }
  for (int i = 0; i < g.nx; ++i) {
    b[g.idx(i, g.ny - 1)] += 2.0 * g.x[i] / g.hy;
    b[g.idx(i, 0)] -= 2.0 * g.x[i] / g.hy;
  }
  b.array() -= b.mean();  // compatibility: rhs orthogonal to constants

  // plain CG on the singular PSD system, iterates kept mean-free
  Eigen::VectorXd phi = Eigen::VectorXd::Zero(N);
  Eigen::VectorXd r = b;
  Eigen::VectorXd p = r;
  double rs = r.squaredNorm();
  const double tol2 = 1e-24 * rs;
  for (int it = 0; it < 40000 && rs > tol2; ++it) {
    const Eigen::VectorXd Ap = g.apply(p);
    const double alpha = rs / p.dot(Ap);
    phi += alpha * p;
    r -= alpha * Ap;
    const double rs_new = r.squaredNorm();
    p = r + (rs_new / rs) * p;
    rs = rs_new;
    if (it % 256 == 0) phi.array() -= phi.mean();
  }

  // tau = int (x2^2 + x3^2 + x3 d2 phi - x2 d3 phi), trapezoid weights,
  // central differences inside and one-sided at the edges
  double tau = 0.0;
  for (int j = 0; j < g.ny; ++j)
    for (int i = 0; i < g.nx; ++i) {
      double d2, d3;
      if (i == 0)
        d2 = (phi[g.idx(1, j)] - phi[g.idx(0, j)]) / g.hx;
      else if (i == g.nx - 1)
        d2 = (phi[g.idx(i, j)] - phi[g.idx(i - 1, j)]) / g.hx;
      else
        d2 = (phi[g.idx(i + 1, j)] - phi[g.idx(i - 1, j)]) / (2.0 * g.hx);
      if (j == 0)
        d3 = (phi[g.idx(i, 1)] - phi[g.idx(i, 0)]) / g.hy;
      else if (j == g.ny - 1)
        d3 = (phi[g.idx(i, j)] - phi[g.idx(i, j - 1)]) / g.hy;
      else
        d3 = (phi[g.idx(i, j + 1)] - phi[g.idx(i, j - 1)]) / (2.0 * g.hy);
      const double wgt = ((i == 0 || i == g.nx - 1) ? 0.5 : 1.0) *
                         ((j == 0 || j == g.ny - 1) ? 0.5 : 1.0);
      tau += wgt * (g.x[i] * g.x[i] + g.y[j] * g.y[j] + g.y[j] * d2 -
                    g.x[i] * d3);
    }
  return tau * g.hx * g.hy;
}

}  // namespace rodstab::testing

#include "rodstab/critical_force.hpp"

#include <cmath>
#include <limits>

#include "rodstab/second_variation.hpp"

namespace rodstab {

std::pair<double, double> g_functions(double x, double a) {
  const double p = x - a * x * x * x;
  return {p * std::sin(x) + 2.0 * (std::cos(x) - 1.0),
          p * (std::cos(x) + 1.0) - 2.0 * std::sin(x)};
}

std::optional<double> find_x_star(double a) {
  if (!(a > 0.0)) throw std::invalid_argument("find_x_star: a must be > 0");
  if (1.0 - 4.0 * M_PI * M_PI * a >= 0.0) return std::nullopt;
  double lo = M_PI + 1e-6, hi = 2.0 * M_PI;
  double glo = g_functions(lo, a).second;
  double ghi = g_functions(hi, a).second;
  if (!(glo > 0.0) || !(ghi < 0.0))
    throw RootNotBracketed("find_x_star: g2 does not change sign in (pi,2pi)");
  while (hi - lo > 1e-12) {
    const double mid = 0.5 * (lo + hi);
    if (g_functions(mid, a).second > 0.0)
      lo = mid;
    else
      hi = mid;
  }
  const double xs = 0.5 * (lo + hi);
  const double g1 = g_functions(xs, a).first;
  const double scale = std::max(1.0, std::abs(xs - a * xs * xs * xs));
  if (std::abs(g1) > 1e-9 * scale)
    throw RootNotBracketed("find_x_star: g1 not small at the g2 root");
  return xs;
}

const char* branch_name(CriticalBranch b) {
  switch (b) {
    case CriticalBranch::TwoPi: return "two-pi";
    case CriticalBranch::XStar: return "x-star";
    case CriticalBranch::Weak: return "weak";
    case CriticalBranch::Torsional: return "torsional";
  }
  return "?";
}

CriticalForceBreakdown f_crit_analytic(const RodCoefficients& rc,
                                       const BoundaryCondition& bc) {
  const double L = rc.length_L;
  const double pi2 = M_PI * M_PI;
  const double c13k = rc.c13 * rc.k;

  CriticalForceBreakdown out;
  out.f2_crit = -pi2 * rc.c13 / (L * L);
  out.a_param = rc.k == 0.0 ? std::numeric_limits<double>::infinity()
                            : rc.c12 * rc.c23 / (c13k * L * c13k * L);
  out.x_star = std::nullopt;

  if (bc.kind == BoundaryCondition::Kind::ClampedClamped) {
    if (!bc.R0.isIdentity(1e-10) || !bc.RL.isIdentity(1e-10))
      throw UnsupportedBc("f_crit: clamped-clamped requires identity frames");
    // condition (c13 k L)^2 / (4 pi^2 c12 c23) >= 1, i.e. 4 pi^2 a <= 1;
    // at k = 0 it fails in the limit and x* plays no role
    const bool two_pi =
        rc.k != 0.0 && 4.0 * pi2 * out.a_param <= 1.0;
    if (two_pi) {
      out.f1_crit = c13k * c13k / rc.c23 - 4.0 * pi2 * rc.c12 / (L * L);
      out.branch = CriticalBranch::TwoPi;
    } else {
      double xs2;
      if (rc.k == 0.0) {
        xs2 = 4.0 * pi2;  // continuity in k of the displayed formula
        out.branch = CriticalBranch::TwoPi;
      } else {
        out.x_star = find_x_star(out.a_param);
        xs2 = *out.x_star * *out.x_star;
        out.branch = CriticalBranch::XStar;
      }
      out.f1_crit = c13k * c13k / rc.c23 - xs2 * rc.c12 / (L * L);
    }
  } else if (bc.kind == BoundaryCondition::Kind::WeakClamped) {
    out.f1_crit = c13k * c13k / rc.c23 - pi2 * rc.c12 / (L * L);
    out.branch = CriticalBranch::Weak;
  } else {
    throw UnsupportedBc("f_crit: no straight critical point for this bc");
  }

  out.f_crit = std::max(out.f1_crit, out.f2_crit);
  if (out.f2_crit > out.f1_crit) {
    out.branch = CriticalBranch::Torsional;
    out.x_star = std::nullopt;
  }
  return out;
}

double f_crit_numeric(const RodCoefficients& rc, const BoundaryCondition& bc,
                      int segments, double bracket_lo, double bracket_hi) {
  if (segments < 100) throw std::invalid_argument("f_crit_numeric: N >= 100");
  SecondVariation sv(rc, rc.length_L, bc, segments);
  bool pd_lo = sv.positive_definite(bracket_lo);
  bool pd_hi = sv.positive_definite(bracket_hi);
  if (pd_lo == pd_hi)
    throw BracketFailure("f_crit_numeric: no sign change across the bracket");
  const double scale =
      std::max({std::abs(bracket_lo), std::abs(bracket_hi), 1e-12});
  double lo = bracket_lo, hi = bracket_hi;
  while (hi - lo > 1e-8 * scale) {
    const double mid = 0.5 * (lo + hi);
    if (sv.positive_definite(mid) == pd_hi)
      hi = mid;
    else
      lo = mid;
  }
  return 0.5 * (lo + hi);
}

double f_crit_numeric(const RodCoefficients& rc, const BoundaryCondition& bc,
                      int segments) {
  const CriticalForceBreakdown ana = f_crit_analytic(rc, bc);
  const double L = rc.length_L;
  const double scale = std::max({std::abs(ana.f_crit),
                                 rc.c13 * rc.k * rc.k,
                                 rc.c12 / (L * L), 1e-12});
  return f_crit_numeric(rc, bc, segments, ana.f_crit - 10.0 * scale,
                        ana.f_crit + 10.0 * scale);
}

}  // namespace rodstab

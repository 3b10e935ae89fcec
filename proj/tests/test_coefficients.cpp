#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "rodstab/cross_section.hpp"
#include "support/torsion_fd.hpp"

using namespace rodstab;

namespace {

// midpoint-rule quadrature over the rectangle, the independent moment oracle
SectionMoments moments_quadrature(double wy, double wz, int n = 400) {
  const double hx = 2.0 * wy / n, hy = 2.0 * wz / n;
  SectionMoments m{0.0, 0.0, 0.0};
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const double x2 = -wy + (i + 0.5) * hx;
      const double x3 = -wz + (j + 0.5) * hy;
      m.m2 += x2 * x2 * hx * hy;
      m.m3 += x3 * x3 * hx * hy;
      if (x3 > 0.0) m.s3plus += x3 * hx * hy;
    }
  return m;
}

}  // namespace

TEST_CASE("cross section enforces unit area") {
  CrossSection cs(0.6);
  CHECK(std::abs(4.0 * cs.wy() * cs.wz() - 1.0) < 1e-12);
  CHECK_THROWS_AS(CrossSection(0.0), std::invalid_argument);
  CHECK_THROWS_AS(CrossSection(-1.0), std::invalid_argument);
}

TEST_CASE("second moments: closed form vs quadrature") {
  SUBCASE("square") {
    const SectionMoments m = second_moments(CrossSection(0.5));
    CHECK(m.m2 == doctest::Approx(1.0 / 12.0).epsilon(1e-12));
    CHECK(m.m3 == doctest::Approx(1.0 / 12.0).epsilon(1e-12));
    CHECK(m.s3plus == doctest::Approx(1.0 / 8.0).epsilon(1e-12));
  }
  SUBCASE("wz = 0.6") {
    const SectionMoments m = second_moments(CrossSection(0.6));
    CHECK(m.m3 == doctest::Approx(0.12).epsilon(1e-12));
    CHECK(m.s3plus == doctest::Approx(0.15).epsilon(1e-12));
  }
  SUBCASE("quadrature oracle over aspect ratios") {
    for (double wz : {0.3, 0.5, 0.9, 1.7}) {
      const CrossSection cs(wz);
      const SectionMoments a = second_moments(cs);
      const SectionMoments q = moments_quadrature(cs.wy(), cs.wz());
      CHECK(a.m2 == doctest::Approx(q.m2).epsilon(1e-5));
      CHECK(a.m3 == doctest::Approx(q.m3).epsilon(1e-5));
      CHECK(a.s3plus == doctest::Approx(q.s3plus).epsilon(1e-5));
    }
  }
  SUBCASE("swap symmetry") {
    const CrossSection a(0.7);
    const CrossSection b(a.wy());  // swapped rectangle, area stays 1
    CHECK(second_moments(a).m2 ==
          doctest::Approx(second_moments(b).m3).epsilon(1e-13));
  }
}

TEST_CASE("torsional rigidity series") {
  const CrossSection square(0.5);
  SUBCASE("square value") {
    CHECK(torsional_rigidity(square, 20) ==
          doctest::Approx(0.14057702514).epsilon(1e-9));
    CHECK(torsional_rigidity(square, 32) ==
          doctest::Approx(0.14057701651207827).epsilon(1e-12));
  }
  SUBCASE("one term is already close") {
    CHECK(std::abs(torsional_rigidity(square, 1) -
                   torsional_rigidity(square, 20)) < 1e-2);
  }
  SUBCASE("monotone decreasing in n_terms and positive") {
    for (double wz : {0.25, 0.5, 1.0, 2.0}) {
      const CrossSection cs(wz);
      double prev = torsional_rigidity(cs, 1);
      for (int n : {2, 4, 8, 16, 32}) {
        const double cur = torsional_rigidity(cs, n);
        CHECK(cur <= prev + 1e-15);
        prev = cur;
      }
      CHECK(prev > 0.0);
    }
  }
  SUBCASE("series tail bound") {
    // |tau(n+m) - tau(n)| <= 16 wy wz^3 * 64 wz/(pi^5 wy) * sum_{j>n}(2j+1)^-5
    for (double wz : {0.5, 1.3}) {
      const CrossSection cs(wz);
      const int n = 8;
      double tail = 0.0;
      for (int j = n; j < 500; ++j) tail += std::pow(2.0 * j + 1.0, -5);
      const double bound = 16.0 * cs.wy() * std::pow(cs.wz(), 3) * 64.0 *
                           cs.wz() / (std::pow(M_PI, 5) * cs.wy()) * tail;
      CHECK(std::abs(torsional_rigidity(cs, 64) - torsional_rigidity(cs, n)) <=
            bound * (1.0 + 1e-12));
      // the default 32 terms leave a relative tail well below the 1e-3
      // agreement the PDE oracle is held to
      CHECK(std::abs(torsional_rigidity(cs, 2048) -
                     torsional_rigidity(cs, 32)) <=
            1e-5 * torsional_rigidity(cs, 2048));
    }
  }
  SUBCASE("finite-difference PDE oracle across aspect ratios") {
    for (double wz : {0.125, 0.5, 2.0}) {  // aspect ratios 16, 1, 1/16
      const CrossSection cs(wz);
      const double fd = testing::torsional_rigidity_fd(cs.wy(), cs.wz(), 200);
      CHECK(torsional_rigidity(cs) == doctest::Approx(fd).epsilon(1e-3));
    }
  }
  CHECK_THROWS_AS(torsional_rigidity(square, 0), std::invalid_argument);
}

TEST_CASE("intrinsic curvature") {
  CHECK(intrinsic_curvature(CrossSection(0.5), 0.0) == 0.0);
  CHECK(intrinsic_curvature(CrossSection(0.6), 6.0) ==
        doctest::Approx(7.5).epsilon(1e-13));
  CHECK(intrinsic_curvature(CrossSection(0.45), 10.0) ==
        doctest::Approx(50.0 / 3.0).epsilon(1e-13));
  SUBCASE("linear in chi") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> uw(0.1, 2.0), uc(0.0, 30.0);
    for (int i = 0; i < 50; ++i) {
      const CrossSection cs(uw(rng));
      const double chi = uc(rng);
      CHECK(intrinsic_curvature(cs, 2.0 * chi) ==
            2.0 * intrinsic_curvature(cs, chi));
    }
  }
  CHECK_THROWS_AS(intrinsic_curvature(CrossSection(0.5), -1.0),
                  std::invalid_argument);
}

TEST_CASE("build_coefficients") {
  SUBCASE("lambda = 0: factor 2 mu") {
    MaterialParams mp;
    mp.lame_lambda = 0.0;
    mp.lame_mu = 1.0;
    mp.normalize_by_mu = false;
    const RodCoefficients rc =
        build_coefficients(mp, CrossSection(0.5), 0.0, 1.0);
    CHECK(rc.c12 == doctest::Approx(1.0 / 6.0).epsilon(1e-12));
    CHECK(rc.c13 == doctest::Approx(1.0 / 6.0).epsilon(1e-12));
    CHECK(rc.c23 == doctest::Approx(0.140577).epsilon(1e-4));
  }
  SUBCASE("paper materials, normalized") {
    MaterialParams mp;  // defaults are the paper's values
    const RodCoefficients rc =
        build_coefficients(mp, CrossSection(0.6), 6.0, 1.0);
    const double factor = (3.0 * mp.lame_lambda + 2.0 * mp.lame_mu) /
                          (mp.lame_lambda + mp.lame_mu);
    CHECK(factor == doctest::Approx(2.997997881550509).epsilon(1e-14));
    CHECK(rc.c12 == doctest::Approx(0.17349524777491374).epsilon(1e-13));
    CHECK(rc.c13 == doctest::Approx(0.35975974578606107).epsilon(1e-13));
    CHECK(rc.c23 == rc.tau_s);  // mu-normalized torsion stiffness
    CHECK(rc.k == doctest::Approx(7.5));
    // normalized coefficients are the unnormalized ones divided by mu
    MaterialParams raw = mp;
    raw.normalize_by_mu = false;
    const RodCoefficients rr =
        build_coefficients(raw, CrossSection(0.6), 6.0, 1.0);
    CHECK(rr.c12 == doctest::Approx(rc.c12 * mp.lame_mu).epsilon(1e-13));
    CHECK(rr.c23 == doctest::Approx(rc.c23 * mp.lame_mu).epsilon(1e-13));
    CHECK(rr.k == rc.k);
  }
  SUBCASE("moment ratio invariant") {
    MaterialParams mp;
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> uw(0.15, 2.5);
    for (int i = 0; i < 30; ++i) {
      const CrossSection cs(uw(rng));
      const RodCoefficients rc = build_coefficients(mp, cs, 3.0, 1.0);
      CHECK(rc.c12 / rc.c13 ==
            doctest::Approx(std::pow(cs.wy() / cs.wz(), 2)).epsilon(1e-12));
      CHECK(rc.c12 > 0.0);
      CHECK(rc.c13 > 0.0);
      CHECK(rc.c23 > 0.0);
    }
  }
  SUBCASE("invalid materials") {
    MaterialParams mp;
    mp.lame_mu = 0.0;
    CHECK_THROWS_AS(build_coefficients(mp, CrossSection(0.5), 1.0, 1.0),
                    std::invalid_argument);
  }
}

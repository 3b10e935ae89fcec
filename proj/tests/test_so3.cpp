#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "rodstab/so3.hpp"

using namespace rodstab;

namespace {
std::mt19937_64 rng(42);

Vec3 random_vec(double scale) {
  std::normal_distribution<double> g(0.0, scale);
  return Vec3(g(rng), g(rng), g(rng));
}
}  // namespace

TEST_CASE("hat and vee") {
  const Vec3 w(0.3, -1.2, 0.7);
  const Mat3 A = hat(w);
  CHECK((A + A.transpose()).norm() == 0.0);
  CHECK((vee(A) - w).norm() == 0.0);
  // convention hat(w) v = w x v and the strain-component signs
  const Vec3 v(0.5, 1.0, -2.0);
  CHECK((A * v - w.cross(v)).norm() < 1e-15);
  CHECK(A(0, 1) == -w.z());
  CHECK(A(0, 2) == w.y());
  CHECK(A(1, 2) == -w.x());
}

TEST_CASE("exp_skew") {
  SUBCASE("zero maps to identity") {
    CHECK((exp_skew(Vec3::Zero()) - Mat3::Identity()).norm() == 0.0);
  }
  SUBCASE("curved-beam generator") {
    const double k = 1.7, x = 0.43;
    const Mat3 R = exp_skew(Vec3(0.0, k, 0.0), x);
    Mat3 expect;
    expect << std::cos(k * x), 0.0, std::sin(k * x), 0.0, 1.0, 0.0,
        -std::sin(k * x), 0.0, std::cos(k * x);
    CHECK((R - expect).cwiseAbs().maxCoeff() < 1e-15);
    // body strain R^T R' of the beam equals hat((0, k, 0))
    const double eps = 1e-6;
    const Mat3 Rd = (exp_skew(Vec3(0.0, k, 0.0), x + eps) -
                     exp_skew(Vec3(0.0, k, 0.0), x - eps)) /
                    (2.0 * eps);
    CHECK((vee(R.transpose() * Rd) - Vec3(0.0, k, 0.0)).norm() < 1e-8);
  }
  SUBCASE("group property and periodicity") {
    for (int i = 0; i < 20; ++i) {
      const Vec3 w = random_vec(1.0);
      const double t1 = 0.3, t2 = 1.1;
      CHECK((exp_skew(w, t1 + t2) - exp_skew(w, t1) * exp_skew(w, t2))
                .cwiseAbs()
                .maxCoeff() < 1e-13);
    }
    const Vec3 w = random_vec(1.0);
    const Vec3 u = w / w.norm();
    CHECK((exp_skew(u, 2.0 * M_PI) - Mat3::Identity()).cwiseAbs().maxCoeff() <
          1e-12);
  }
  SUBCASE("always a rotation") {
    for (int i = 0; i < 100; ++i) CHECK(is_rotation(exp_skew(random_vec(2.0))));
  }
}

TEST_CASE("log_rotation") {
  SUBCASE("identity") { CHECK(log_rotation(Mat3::Identity()).norm() == 0.0); }
  SUBCASE("round trip") {
    CHECK((log_rotation(exp_skew(Vec3(0.1, 0.2, 0.3))) - Vec3(0.1, 0.2, 0.3))
              .norm() < 1e-10);
    double worst = 0.0;
    std::uniform_real_distribution<double> uang(1e-6, M_PI - 0.01);
    for (int i = 0; i < 1000; ++i) {
      Vec3 axis = random_vec(1.0);
      axis /= axis.norm();
      const Vec3 w = uang(rng) * axis;
      worst = std::max(worst, (log_rotation(exp_skew(w)) - w).norm());
    }
    CHECK(worst < 1e-8);
  }
  SUBCASE("near pi") {
    const Vec3 w(M_PI - 1e-3, 0.0, 0.0);
    CHECK((log_rotation(exp_skew(w)) - w).norm() < 1e-6);
    CHECK_THROWS_AS(log_rotation(exp_skew(Vec3(M_PI - 1e-9, 0.0, 0.0))),
                    AngleNearPi);
  }
}

TEST_CASE("polar projection") {
  SUBCASE("fixes rotations and scalar multiples") {
    const Mat3 R = exp_skew(Vec3(0.4, -0.2, 0.9));
    CHECK((polar_project(R) - R).cwiseAbs().maxCoeff() < 1e-14);
    CHECK((polar_project(2.0 * Mat3::Identity()) - Mat3::Identity())
              .cwiseAbs()
              .maxCoeff() < 1e-14);
  }
  SUBCASE("idempotent") {
    for (int i = 0; i < 50; ++i) {
      Mat3 M = Mat3::Identity() + 0.6 * Mat3::Random();
      if (M.determinant() <= 1e-12) continue;
      const Mat3 P = polar_project(M);
      CHECK((polar_project(P) - P).cwiseAbs().maxCoeff() < 1e-12);
      CHECK(is_rotation(P, 1e-12));
    }
  }
  SUBCASE("minimizes distance among rotations") {
    for (int i = 0; i < 20; ++i) {
      Mat3 M = Mat3::Identity() + 0.4 * Mat3::Random();
      if (M.determinant() <= 1e-12) continue;
      const Mat3 P = polar_project(M);
      for (int j = 0; j < 20; ++j)
        CHECK((M - P).norm() <=
              (M - exp_skew(random_vec(1.0))).norm() + 1e-12);
    }
  }
  SUBCASE("clamping lemma: first column fixed") {
    // M e1 = e1, <M e2, e1> = <M e3, e1> = 0, det M > 0
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (int i = 0; i < 1000; ++i) {
      Mat3 M = Mat3::Identity();
      Eigen::Matrix2d blk;
      do {
        blk << 1.0 + 0.8 * u(rng), 0.8 * u(rng), 0.8 * u(rng),
            1.0 + 0.8 * u(rng);
      } while (blk.determinant() <= 0.05);
      M.block<2, 2>(1, 1) = blk;
      M(1, 0) = 0.5 * u(rng);  // first column stays e1; first row stays e1^T
      M(2, 0) = 0.5 * u(rng);
      M.col(0) = Vec3(1.0, 0.0, 0.0);
      REQUIRE(M.determinant() > 0.0);
      const Mat3 P = polar_project(M);
      CHECK((P * Vec3(1.0, 0.0, 0.0) - Vec3(1.0, 0.0, 0.0)).norm() < 1e-10);
    }
  }
  SUBCASE("singular input rejected") {
    Mat3 M = Mat3::Zero();
    CHECK_THROWS_AS(polar_project(M), SingularInput);
  }
}

TEST_CASE("frame_with_first_row") {
  SUBCASE("e1 maps to identity") {
    CHECK((frame_with_first_row(Vec3(1.0, 0.0, 0.0)) - Mat3::Identity())
              .cwiseAbs()
              .maxCoeff() < 1e-14);
  }
  SUBCASE("helical boundary vector") {
    const double d = 0.05;
    const Vec3 r(1.0 - d, std::sqrt(2.0 * d - d * d), 0.0);
    const Mat3 R = frame_with_first_row(r);
    CHECK((R.transpose() * Vec3(1.0, 0.0, 0.0) - r).norm() < 1e-12);
    CHECK(is_rotation(R, 1e-12));
    // in-plane: e3 untouched
    CHECK((R * Vec3(0.0, 0.0, 1.0) - Vec3(0.0, 0.0, 1.0)).norm() < 1e-14);
  }
  SUBCASE("random directions give rotations") {
    for (int i = 0; i < 200; ++i) {
      Vec3 r = random_vec(1.0);
      r /= r.norm();
      if ((r + Vec3(1.0, 0.0, 0.0)).norm() < 1e-6) continue;
      const Mat3 R = frame_with_first_row(r);
      CHECK(is_rotation(R, 1e-10));
      CHECK((R.transpose() * Vec3(1.0, 0.0, 0.0) - r).norm() < 1e-12);
    }
  }
  SUBCASE("antipodal direction rejected") {
    CHECK_THROWS_AS(frame_with_first_row(Vec3(-1.0, 0.0, 0.0)), DegenerateAxis);
    CHECK_THROWS_AS(frame_with_first_row(Vec3(0.5, 0.5, 0.0)),
                    std::invalid_argument);
  }
}

TEST_CASE("right Jacobian inverse differentiates the log") {
  // d/dt vee(log(exp(W) exp(t V))) at t=0 equals J_r^{-1}(w) v
  for (int i = 0; i < 40; ++i) {
    const Vec3 w = random_vec(0.8);
    const Vec3 v = random_vec(1.0);
    const double eps = 1e-6;
    const Vec3 fp = log_rotation(exp_skew(w) * exp_skew(eps * v));
    const Vec3 fm = log_rotation(exp_skew(w) * exp_skew(-eps * v));
    const Vec3 fd = (fp - fm) / (2.0 * eps);
    CHECK((right_jacobian_inverse(w) * v - fd).norm() < 1e-7 * (1 + fd.norm()));
  }
}

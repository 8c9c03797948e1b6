/*
 Copyright 2026 The Swarmsling Authors

 Licensed under the Apache License, Version 2.0 (the "License");
 you may not use this file except in compliance with the License.
 You may obtain a copy of the License at

 https://www.apache.org/licenses/LICENSE-2.0

 Unless required by applicable law or agreed to in writing, software
 distributed under the License is distributed on an "AS IS" BASIS,
 WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 See the License for the specific language governing permissions and
 limitations under the License.
 */

#include <doctest.h>

#include <cmath>
#include <random>

#include "swarmsling/errors.hpp"
#include "swarmsling/geometry.hpp"

namespace {

using swarmsling::Mat3;
using swarmsling::Vec3;

Vec3 random_vec(std::mt19937& rng, double scale = 1.0) {
  std::uniform_real_distribution<double> dist(-scale, scale);
  return Vec3{dist(rng), dist(rng), dist(rng)};
}

Mat3 random_rotation(std::mt19937& rng) {
  return swarmsling::exp_so3(random_vec(rng, 3.0));
}

Mat3 rot_z(double angle) {
  return swarmsling::exp_so3(angle * Vec3::UnitZ());
}

}  // namespace

TEST_SUITE("geometry") {

TEST_CASE("hat maps vectors to cross-product matrices") {
  std::mt19937 rng(42);
  for (int k = 0; k < 100; ++k) {
    const Vec3 a = random_vec(rng, 5.0);
    const Vec3 b = random_vec(rng, 5.0);
    CHECK((swarmsling::hat(a) * b - a.cross(b)).norm() <= 1e-15);
  }
}

TEST_CASE("hat and vee are inverse on skew matrices") {
  std::mt19937 rng(43);
  for (int k = 0; k < 100; ++k) {
    const Vec3 v = random_vec(rng, 10.0);
    CHECK((swarmsling::vee(swarmsling::hat(v)) - v).norm() <= 1e-12);
    const Mat3 S = swarmsling::hat(v);
    CHECK((swarmsling::hat(swarmsling::vee(S)) - S).norm() <= 1e-12);
  }
}

TEST_CASE("vee rejects a matrix with a symmetric part") {
  Mat3 m = swarmsling::hat(Vec3{1.0, 2.0, 3.0});
  m(0, 0) = 1e-6;
  CHECK_THROWS_AS(swarmsling::vee(m), swarmsling::NonSkewInput);
}

TEST_CASE("attitude error function hits its known landmarks") {
  const Mat3 I = Mat3::Identity();
  CHECK(swarmsling::attitude_error_fn(I, I) == doctest::Approx(0.0));
  // A quarter turn about z scores 1, a half turn scores the maximum 2.
  CHECK(swarmsling::attitude_error_fn(rot_z(M_PI / 2.0), I) ==
        doctest::Approx(1.0).epsilon(1e-12));
  CHECK(swarmsling::attitude_error_fn(rot_z(M_PI), I) ==
        doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("attitude error function stays within [0, 2]") {
  std::mt19937 rng(44);
  for (int k = 0; k < 200; ++k) {
    const double psi =
        swarmsling::attitude_error_fn(random_rotation(rng), random_rotation(rng));
    CHECK(psi >= -1e-12);
    CHECK(psi <= 2.0 + 1e-12);
  }
}

TEST_CASE("attitude error vector sign convention") {
  // Rotating the body a quarter turn about +z relative to the target must
  // produce a positive z error so that a negative feedback moment unwinds it.
  const Vec3 e_R =
      swarmsling::attitude_error_vec(rot_z(M_PI / 2.0), Mat3::Identity());
  CHECK((e_R - Vec3{0.0, 0.0, 1.0}).norm() <= 1e-12);
}

TEST_CASE("attitude error vector is antisymmetric in its arguments") {
  std::mt19937 rng(45);
  for (int k = 0; k < 50; ++k) {
    const Mat3 R = random_rotation(rng);
    const Mat3 Rd = random_rotation(rng);
    CHECK((swarmsling::attitude_error_vec(R, Rd) +
           swarmsling::attitude_error_vec(Rd, R))
              .norm() <= 1e-12);
  }
}

TEST_CASE("attitude error vector is the gradient of the error function") {
  // Central finite difference of Psi along R exp(eps*hat(eta)) against
  // e_R . eta, the identity the moment feedback relies on.
  std::mt19937 rng(46);
  const double eps = 1e-7;
  for (int k = 0; k < 100; ++k) {
    const Mat3 R = random_rotation(rng);
    const Mat3 Rd = random_rotation(rng);
    const Vec3 eta = random_vec(rng);
    const double plus = swarmsling::attitude_error_fn(
        R * swarmsling::exp_so3(eps * eta), Rd);
    const double minus = swarmsling::attitude_error_fn(
        R * swarmsling::exp_so3(-eps * eta), Rd);
    const double fd = (plus - minus) / (2.0 * eps);
    const double analytic = swarmsling::attitude_error_vec(R, Rd).dot(eta);
    CHECK(std::abs(fd - analytic) <= 1e-6);
  }
}

TEST_CASE("angular velocity error at a known configuration") {
  const Vec3 e1 = Vec3::UnitX();
  const Vec3 e_Omega = swarmsling::angular_velocity_error(
      Mat3::Identity(), rot_z(M_PI / 2.0), e1, e1);
  CHECK((e_Omega - Vec3{1.0, -1.0, 0.0}).norm() <= 1e-12);
}

TEST_CASE("angular velocity error vanishes when frames and rates agree") {
  std::mt19937 rng(47);
  for (int k = 0; k < 50; ++k) {
    const Mat3 R = random_rotation(rng);
    const Vec3 Om = random_vec(rng, 2.0);
    CHECK(swarmsling::angular_velocity_error(R, R, Om, Om).norm() <= 1e-12);
  }
}

TEST_CASE("exp_so3 matches the quarter-turn rotation") {
  const Mat3 expected =
      (Mat3() << 0, -1, 0, 1, 0, 0, 0, 0, 1).finished();
  CHECK((rot_z(M_PI / 2.0) - expected).norm() <= 1e-12);
}

TEST_CASE("exp_so3 produces rotations and respects inversion") {
  std::mt19937 rng(48);
  for (int k = 0; k < 100; ++k) {
    const Vec3 v = random_vec(rng, 4.0);
    const Mat3 R = swarmsling::exp_so3(v);
    CHECK(swarmsling::is_rotation(R));
    CHECK((swarmsling::exp_so3(-v) - R.transpose()).norm() <= 1e-12);
  }
}

TEST_CASE("exp_so3 small-angle branch agrees with the first-order map") {
  const Vec3 axis = Vec3{1.0, -2.0, 0.5}.normalized();
  const Vec3 v = 1e-8 * axis;
  const Mat3 R = swarmsling::exp_so3(v);
  CHECK((R - (Mat3::Identity() + swarmsling::hat(v))).norm() <= 1e-15);
  CHECK(swarmsling::is_rotation(R));
}

TEST_CASE("project_to_rotation fixes small orthonormality drift") {
  std::mt19937 rng(49);
  for (int k = 0; k < 50; ++k) {
    const Mat3 R = random_rotation(rng);
    Mat3 drifted = R;
    for (int r = 0; r < 3; ++r) {
      for (int c = 0; c < 3; ++c) {
        drifted(r, c) += 1e-4 * random_vec(rng).x();
      }
    }
    const Mat3 repaired = swarmsling::project_to_rotation(drifted);
    CHECK(swarmsling::is_rotation(repaired));
    CHECK((repaired - R).norm() <= 1e-3);
    // Projecting an exact rotation is the identity operation.
    CHECK((swarmsling::project_to_rotation(R) - R).norm() <= 1e-13);
  }
}

TEST_CASE("project_to_rotation returns determinant +1 near reflections") {
  Mat3 flipped = Mat3::Identity();
  flipped(2, 2) = -1.0;  // an orthonormal matrix with determinant -1
  const Mat3 repaired = swarmsling::project_to_rotation(flipped);
  CHECK(swarmsling::is_rotation(repaired));
  CHECK(repaired.determinant() == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("project_to_rotation rejects rank-deficient input") {
  CHECK_THROWS_AS(swarmsling::project_to_rotation(Mat3::Zero()),
                  swarmsling::DegenerateMatrix);
}

TEST_CASE("is_rotation and is_unit reject off-manifold values") {
  CHECK(swarmsling::is_rotation(Mat3::Identity()));
  CHECK_FALSE(swarmsling::is_rotation(2.0 * Mat3::Identity()));
  CHECK(swarmsling::is_unit(Vec3::UnitZ()));
  CHECK_FALSE(swarmsling::is_unit(Vec3{0.0, 0.0, 1.1}));
}

}  // TEST_SUITE("geometry")

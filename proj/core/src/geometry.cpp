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

#include "swarmsling/geometry.hpp"

#include <cmath>

#include "swarmsling/errors.hpp"

namespace swarmsling {

Mat3 hat(const Vec3& v) {
  Mat3 m;
  // clang-format off
  m <<   0.0, -v.z(),  v.y(),
       v.z(),    0.0, -v.x(),
      -v.y(),  v.x(),    0.0;
  // clang-format on
  return m;
}

Vec3 vee(const Mat3& m) {
  if ((m + m.transpose()).norm() > kSkewTol) {
    throw NonSkewInput("vee: matrix is not skew-symmetric");
  }
  return Vec3{m(2, 1), m(0, 2), m(1, 0)};
}

bool is_rotation(const Mat3& m, double tol) {
  return (m.transpose() * m - Mat3::Identity()).norm() <= tol &&
         m.determinant() > 0.0;
}

bool is_unit(const Vec3& v, double tol) {
  return std::abs(v.norm() - 1.0) <= tol;
}

double attitude_error_fn(const Mat3& R, const Mat3& R_d) {
  return 0.5 * (Mat3::Identity() - R_d.transpose() * R).trace();
}

Vec3 attitude_error_vec(const Mat3& R, const Mat3& R_d) {
  const Mat3 E = R_d.transpose() * R;
  // (E - E^T) is skew by construction; read the components off directly
  // instead of going through vee() and its tolerance check.
  const Mat3 S = 0.5 * (E - E.transpose());
  return Vec3{S(2, 1), S(0, 2), S(1, 0)};
}

Vec3 angular_velocity_error(const Mat3& R, const Mat3& R_d, const Vec3& Omega,
                            const Vec3& Omega_d) {
  return Omega - R.transpose() * R_d * Omega_d;
}

Mat3 project_to_rotation(const Mat3& m) {
  if (std::abs(m.determinant()) <= 1e-12) {
    throw DegenerateMatrix("project_to_rotation: determinant too small");
  }
  Eigen::JacobiSVD<Mat3> svd(m, Eigen::ComputeFullU | Eigen::ComputeFullV);
  const Mat3 U = svd.matrixU();
  const Mat3 V = svd.matrixV();
  Vec3 s{1.0, 1.0, (U * V.transpose()).determinant() > 0.0 ? 1.0 : -1.0};
  return U * s.asDiagonal() * V.transpose();
}

Mat3 exp_so3(const Vec3& v) {
  const double theta2 = v.squaredNorm();
  const double theta = std::sqrt(theta2);
  // sin(t)/t and (1-cos(t))/t^2, with Taylor fallbacks near zero.
  double a;
  double b;
  if (theta < 1e-6) {
    a = 1.0 - theta2 / 6.0;
    b = 0.5 - theta2 / 24.0;
  } else {
    a = std::sin(theta) / theta;
    b = (1.0 - std::cos(theta)) / theta2;
  }
  const Mat3 vh = hat(v);
  return Mat3::Identity() + a * vh + b * vh * vh;
}

}  // namespace swarmsling

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

#include "swarmsling/quadrotor.hpp"

#include <cmath>
#include <stdexcept>

#include "swarmsling/errors.hpp"

namespace swarmsling {

namespace {

constexpr double kDirectionTol = 1e-9;

// Commanded force A = -k_x e_x - k_v e_v - m g e3 + m a_d shared by the
// attitude and thrust laws.
Vec3 commanded_force(const Vec3& e_x, const Vec3& e_v, const Vec3& a_d,
                     const Gains& gains, const QuadrotorParams& params) {
  return -gains.k_x * e_x - gains.k_v * e_v - params.m * params.g * kE3 +
         params.m * a_d;
}

// First two derivatives of w/|w| given w and its derivatives.
void unit_derivatives(const Vec3& w, const Vec3& w_dot, const Vec3& w_ddot,
                      Vec3& u, Vec3& u_dot, Vec3& u_ddot) {
  const double r = w.norm();
  const double r_dot = w.dot(w_dot) / r;
  const double r_ddot =
      (w_dot.squaredNorm() + w.dot(w_ddot) - r_dot * r_dot) / r;
  u = w / r;
  u_dot = w_dot / r - w * (r_dot / (r * r));
  u_ddot = w_ddot / r - w_dot * (2.0 * r_dot / (r * r)) -
           w * (r_ddot / (r * r)) + w * (2.0 * r_dot * r_dot / (r * r * r));
}

// Reads the vector off a matrix that is skew-symmetric up to rounding.
Vec3 skew_part(const Mat3& m) {
  const Mat3 s = 0.5 * (m - m.transpose());
  return Vec3{s(2, 1), s(0, 2), s(1, 0)};
}

}  // namespace

void QuadrotorParams::validate() const {
  if (!(m > 0.0)) {
    throw std::invalid_argument("QuadrotorParams: mass must be positive");
  }
  if ((J - J.transpose()).norm() > 1e-9) {
    throw std::invalid_argument("QuadrotorParams: inertia must be symmetric");
  }
  Eigen::SelfAdjointEigenSolver<Mat3> eig(J);
  if (eig.eigenvalues().minCoeff() <= 0.0) {
    throw std::invalid_argument(
        "QuadrotorParams: inertia must be positive definite");
  }
  if (!(d > 0.0) || !(c_tau_f > 0.0)) {
    throw std::invalid_argument(
        "QuadrotorParams: rotor geometry must be positive");
  }
  if (!(g > 0.0)) {
    throw std::invalid_argument("QuadrotorParams: gravity must be positive");
  }
  if (!(T_max > 0.0) || !(r_prop > 0.0)) {
    throw std::invalid_argument(
        "QuadrotorParams: thrust capability and radius must be positive");
  }
}

void QuadState::validate() const {
  if (!is_rotation(R)) {
    throw std::invalid_argument("QuadState: R is not a rotation matrix");
  }
}

Gains Gains::defaults_for(const QuadrotorParams& params) {
  // Position loop at 2 rad/s with damping ratio 0.7 and the attitude loop a
  // factor of five faster. The translational gains scale with mass. Softer
  // position gains keep the commanded force inside rotor authority when the
  // vehicle recovers from meter-scale offsets, so the clipped closed loop
  // converges instead of fighting its own saturation.
  Gains g;
  g.k_x = 4.0 * params.m;
  g.k_v = 2.8 * params.m;
  g.k_R = 8.81;
  g.k_Omega = 2.54;
  return g;
}

void Gains::validate() const {
  if (!(k_x > 0.0) || !(k_v > 0.0) || !(k_R > 0.0) || !(k_Omega > 0.0)) {
    throw std::invalid_argument("Gains: all gains must be positive");
  }
}

QuadDerivatives quad_derivatives(const QuadState& state,
                                 const WrenchCommand& wrench,
                                 const QuadrotorParams& params) {
  QuadDerivatives d;
  d.x_dot = state.v;
  d.v_dot = params.g * kE3 - (wrench.f / params.m) * (state.R * kE3);
  d.R_dot = state.R * hat(state.Omega);
  d.Omega_dot =
      params.J.ldlt().solve(wrench.M - state.Omega.cross(params.J * state.Omega));
  return d;
}

Mat3 desired_attitude(const Vec3& e_x, const Vec3& e_v, const Vec3& a_d,
                      const Vec3& b1_d, const Gains& gains,
                      const QuadrotorParams& params) {
  const Vec3 A = commanded_force(e_x, e_v, a_d, gains, params);
  const double norm_A = A.norm();
  if (norm_A <= kDirectionTol) {
    throw ZeroThrustDirection("desired_attitude: commanded force vanished");
  }
  const Vec3 b3 = -A / norm_A;
  const Vec3 c = b3.cross(b1_d);
  const double norm_c = c.norm();
  if (norm_c <= kDirectionTol) {
    throw DegenerateHeading(
        "desired_attitude: heading parallel to thrust axis");
  }
  const Vec3 b2 = c / norm_c;
  Mat3 R_d;
  R_d.col(0) = b2.cross(b3);
  R_d.col(1) = b2;
  R_d.col(2) = b3;
  return R_d;
}

double thrust_command(const Vec3& e_x, const Vec3& e_v, const Vec3& a_d,
                      const Mat3& R, const Gains& gains,
                      const QuadrotorParams& params) {
  const Vec3 A = commanded_force(e_x, e_v, a_d, gains, params);
  if (A.norm() <= kDirectionTol) {
    throw ZeroThrustDirection("thrust_command: commanded force vanished");
  }
  return -A.dot(R * kE3);
}

Vec3 moment_command(const Mat3& R, const Mat3& R_d, const Vec3& Omega,
                    const Vec3& Omega_d, const Vec3& Omega_dot_d,
                    const Gains& gains, const QuadrotorParams& params) {
  const Vec3 e_R = attitude_error_vec(R, R_d);
  const Vec3 e_Omega = angular_velocity_error(R, R_d, Omega, Omega_d);
  const Mat3 Rt_Rd = R.transpose() * R_d;
  return -gains.k_R * e_R - gains.k_Omega * e_Omega +
         Omega.cross(params.J * Omega) -
         params.J * (hat(Omega) * Rt_Rd * Omega_d - Rt_Rd * Omega_dot_d);
}

Mat4 mixer_matrix(const QuadrotorParams& params) {
  const double d = params.d;
  const double c = params.c_tau_f;
  Mat4 B;
  // clang-format off
  B << 1.0, 1.0, 1.0, 1.0,
       0.0,  -d, 0.0,   d,
         d, 0.0,  -d, 0.0,
        -c,   c,  -c,   c;
  // clang-format on
  return B;
}

Vec4 mix_thrusts(const WrenchCommand& wrench, const QuadrotorParams& params) {
  const double d = params.d;
  const double c = params.c_tau_f;
  if (!(std::abs(d) > 1e-12) || !(std::abs(c) > 1e-12)) {
    throw SingularMixer("mix_thrusts: thrust-to-wrench map is singular");
  }
  const double f = wrench.f;
  const Vec3& M = wrench.M;
  Vec4 thrusts;
  thrusts << f / 4.0 + M.y() / (2.0 * d) - M.z() / (4.0 * c),
      f / 4.0 - M.x() / (2.0 * d) + M.z() / (4.0 * c),
      f / 4.0 - M.y() / (2.0 * d) - M.z() / (4.0 * c),
      f / 4.0 + M.x() / (2.0 * d) + M.z() / (4.0 * c);
  return thrusts;
}

TrackOutput track_step(const QuadState& state, const TrajectorySample& ref,
                       const Gains& gains, const QuadrotorParams& params) {
  TrackOutput out;
  out.e_x = state.x - ref.x_d;
  out.e_v = state.v - ref.v_d;
  out.R_d = desired_attitude(out.e_x, out.e_v, ref.a_d, ref.b1_d, gains, params);
  out.f = thrust_command(out.e_x, out.e_v, ref.a_d, state.R, gains, params);

  // Differentiate the commanded frame along the closed loop to obtain the
  // desired angular velocity and acceleration. The chain runs through the
  // commanded force A: acceleration under the current thrust gives A_dot,
  // and the thrust rate gives A_ddot.
  const Vec3 A = commanded_force(out.e_x, out.e_v, ref.a_d, gains, params);
  const Vec3 b3_axis = state.R * kE3;
  const Vec3 v_dot = params.g * kE3 - (out.f / params.m) * b3_axis;
  const Vec3 e_a = v_dot - ref.a_d;
  const Vec3 A_dot =
      -gains.k_x * out.e_v - gains.k_v * e_a + params.m * ref.j_d;
  const double f_dot =
      -A_dot.dot(b3_axis) - A.dot(state.R * hat(state.Omega) * kE3);
  const Vec3 v_ddot = -(f_dot * b3_axis +
                        out.f * (state.R * hat(state.Omega) * kE3)) /
                      params.m;
  const Vec3 e_j = v_ddot - ref.j_d;
  const Vec3 A_ddot =
      -gains.k_x * e_a - gains.k_v * e_j + params.m * ref.s_d;

  Vec3 b3;
  Vec3 b3_dot;
  Vec3 b3_ddot;
  unit_derivatives(-A, -A_dot, -A_ddot, b3, b3_dot, b3_ddot);

  const Vec3 C = b3.cross(ref.b1_d);
  const Vec3 C_dot = b3_dot.cross(ref.b1_d) + b3.cross(ref.b1_d_dot);
  const Vec3 C_ddot = b3_ddot.cross(ref.b1_d) +
                      2.0 * b3_dot.cross(ref.b1_d_dot) +
                      b3.cross(ref.b1_d_ddot);
  Vec3 b2;
  Vec3 b2_dot;
  Vec3 b2_ddot;
  unit_derivatives(C, C_dot, C_ddot, b2, b2_dot, b2_ddot);

  Mat3 Rd_dot;
  Rd_dot.col(0) = b2_dot.cross(b3) + b2.cross(b3_dot);
  Rd_dot.col(1) = b2_dot;
  Rd_dot.col(2) = b3_dot;
  Mat3 Rd_ddot;
  Rd_ddot.col(0) =
      b2_ddot.cross(b3) + 2.0 * b2_dot.cross(b3_dot) + b2.cross(b3_ddot);
  Rd_ddot.col(1) = b2_ddot;
  Rd_ddot.col(2) = b3_ddot;

  const Vec3 Omega_d = skew_part(out.R_d.transpose() * Rd_dot);
  const Vec3 Omega_dot_d = skew_part(out.R_d.transpose() * Rd_ddot -
                                     hat(Omega_d) * hat(Omega_d));

  out.Psi = attitude_error_fn(state.R, out.R_d);
  out.e_R = attitude_error_vec(state.R, out.R_d);
  out.e_Omega =
      angular_velocity_error(state.R, out.R_d, state.Omega, Omega_d);
  out.M = moment_command(state.R, out.R_d, state.Omega, Omega_d, Omega_dot_d,
                         gains, params);
  return out;
}

}  // namespace swarmsling

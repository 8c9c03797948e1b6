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

// Single-vehicle rigid-body model, the geometric tracking controller on
// SE(3), and the plus-configuration rotor mixer.
//
// Axes are x-forward, y-right, z-DOWN (see geometry.hpp): gravity is
// +m*g*e3 and total thrust f acts along -R*e3, so a level hover needs
// f = m*g with R = I.

#ifndef SWARMSLING_QUADROTOR_HPP
#define SWARMSLING_QUADROTOR_HPP

#include <Eigen/Dense>

#include "swarmsling/geometry.hpp"
#include "swarmsling/trajectory.hpp"

namespace swarmsling {

using Vec4 = Eigen::Vector4d;
using Mat4 = Eigen::Matrix4d;

// Physical constants of one vehicle. Rotors sit on the body x/y axes at
// distance `d` from the center (plus configuration); `c_tau_f` is the yaw
// torque produced per newton of rotor thrust.
struct QuadrotorParams {
  double m = 0.0;          // mass [kg]
  Mat3 J = Mat3::Zero();   // inertia about body axes [kg m^2]
  double d = 0.0;          // rotor arm length [m]
  double c_tau_f = 0.0;    // rotor torque-to-thrust ratio [m]
  double g = 9.81;         // gravitational acceleration [m/s^2]
  double T_max = 0.0;      // total thrust capability, all rotors [N]
  double r_prop = 0.0;     // propeller (vehicle) radius for spacing [m]

  // Throws std::invalid_argument unless m, d, c_tau_f, g, T_max and r_prop
  // are positive and J is symmetric positive definite.
  void validate() const;
};

// State of one vehicle: position/velocity in the inertial frame, attitude as
// a body-to-inertial rotation, angular velocity in the body frame.
struct QuadState {
  Vec3 x = Vec3::Zero();
  Vec3 v = Vec3::Zero();
  Mat3 R = Mat3::Identity();
  Vec3 Omega = Vec3::Zero();

  // Throws std::invalid_argument if R is not a rotation within kRotationTol.
  void validate() const;
};

// Time derivative of QuadState under a thrust/moment command.
struct QuadDerivatives {
  Vec3 x_dot = Vec3::Zero();
  Vec3 v_dot = Vec3::Zero();
  Mat3 R_dot = Mat3::Zero();
  Vec3 Omega_dot = Vec3::Zero();
};

// Controller gains. The defaults scale the position/velocity gains with the
// vehicle mass so the translational error dynamics keep the same natural
// frequency and damping across vehicles.
struct Gains {
  double k_x = 0.0;
  double k_v = 0.0;
  double k_R = 0.0;
  double k_Omega = 0.0;

  static Gains defaults_for(const QuadrotorParams& params);

  // Throws std::invalid_argument unless all gains are positive.
  void validate() const;
};

// Total thrust magnitude plus body moment.
struct WrenchCommand {
  double f = 0.0;
  Vec3 M = Vec3::Zero();
};

// Controller outputs for one step, kept alongside the tracking errors so
// callers can log them.
struct TrackOutput {
  Vec3 e_x = Vec3::Zero();
  Vec3 e_v = Vec3::Zero();
  double Psi = 0.0;
  Vec3 e_R = Vec3::Zero();
  Vec3 e_Omega = Vec3::Zero();
  double f = 0.0;
  Vec3 M = Vec3::Zero();
  Mat3 R_d = Mat3::Identity();
};

// Rigid-body dynamics: x_dot = v, m v_dot = m g e3 - f R e3,
// R_dot = R hat(Omega), J Omega_dot = M - Omega x J Omega.
QuadDerivatives quad_derivatives(const QuadState& state,
                                 const WrenchCommand& wrench,
                                 const QuadrotorParams& params);

// Desired attitude from position/velocity errors and the feedforward
// acceleration. The commanded force is
//   A = -k_x e_x - k_v e_v - m g e3 + m a_d,
// the desired thrust axis is b3_d = -A/|A|, and the desired frame is
// completed from the heading reference b1_d. Throws ZeroThrustDirection when
// |A| <= 1e-9 and DegenerateHeading when b1_d is (anti-)parallel to b3_d.
Mat3 desired_attitude(const Vec3& e_x, const Vec3& e_v, const Vec3& a_d,
                      const Vec3& b1_d, const Gains& gains,
                      const QuadrotorParams& params);

// Thrust magnitude f = -A . (R e3) for the same commanded force A. Throws
// ZeroThrustDirection when |A| <= 1e-9.
double thrust_command(const Vec3& e_x, const Vec3& e_v, const Vec3& a_d,
                      const Mat3& R, const Gains& gains,
                      const QuadrotorParams& params);

// Attitude-loop moment
//   M = -k_R e_R - k_Omega e_Omega + Omega x J Omega
//       - J (hat(Omega) R^T R_d Omega_d - R^T R_d Omega_dot_d).
Vec3 moment_command(const Mat3& R, const Mat3& R_d, const Vec3& Omega,
                    const Vec3& Omega_d, const Vec3& Omega_dot_d,
                    const Gains& gains, const QuadrotorParams& params);

// Thrust-to-wrench map for the plus configuration: (f, M) = B * (f1..f4).
Mat4 mixer_matrix(const QuadrotorParams& params);

// Per-rotor thrusts realizing a wrench, i.e. B^{-1} * (f, M), computed in
// closed form. Throws SingularMixer when d or c_tau_f make B singular.
Vec4 mix_thrusts(const WrenchCommand& wrench, const QuadrotorParams& params);

// One controller evaluation against a reference sample: errors, thrust and
// moment. The angular velocity and acceleration of the commanded frame are
// derived analytically from the reference derivatives (jerk, snap, heading
// rates) and fed forward to the moment law. Pure function of its inputs;
// saturation is applied by the simulation loop, not here.
TrackOutput track_step(const QuadState& state, const TrajectorySample& ref,
                       const Gains& gains, const QuadrotorParams& params);

}  // namespace swarmsling

#endif  // SWARMSLING_QUADROTOR_HPP

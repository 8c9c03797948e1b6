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

// Coupled dynamics of a rigid payload slung from n quadrotors by massless
// rigid links.
//
// Geometry (axes x-forward, y-right, z-DOWN): the payload carries body-frame
// attachment points rho_i; link i has length l_i and unit direction q_i
// pointing from vehicle i toward its attachment point, so vehicle positions
// are x_i = x_0 + R_0 rho_i - l_i q_i and q_i = e3 places every vehicle
// directly above its attachment. Each vehicle contributes its thrust vector
// u_i = -f_i R_i e3; only the component of u_i along q_i reaches the payload,
// while the orthogonal component swings the link. Vehicle attitude dynamics
// are driven by the body moments alone.
//
// Eliminating the internal link tensions leaves a symmetric 6x6 linear system
// for the payload accelerations (x0_ddot, Omega0_dot); everything else
// follows by kinematics.

#ifndef SWARMSLING_SWARM_DYNAMICS_HPP
#define SWARMSLING_SWARM_DYNAMICS_HPP

#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "swarmsling/geometry.hpp"
#include "swarmsling/quadrotor.hpp"

namespace swarmsling {

// Rigid payload: mass, inertia about its body axes, and the bounding-box
// dimensions (length x, width y, height z) used by the attachment planner.
struct PayloadParams {
  double m0 = 0.0;
  Mat3 J0 = Mat3::Zero();
  Vec3 dims = Vec3::Zero();

  // Throws std::invalid_argument unless m0 and all dims are positive and J0
  // is symmetric positive definite.
  void validate() const;

  // Uniform-density box inertia for the given mass and dimensions.
  static Mat3 box_inertia(double mass, const Vec3& dims);
};

// One massless rigid link: body-frame attachment point on the payload and
// length.
struct LinkSpec {
  Vec3 rho = Vec3::Zero();
  double l = 1.0;
};

// Link direction (unit, vehicle -> attachment, inertial frame) and link
// angular velocity (inertial frame, orthogonal to q).
struct LinkState {
  Vec3 q = kE3;
  Vec3 omega = Vec3::Zero();
};

// Attitude state of one vehicle within the swarm.
struct QuadAttitude {
  Mat3 R = Mat3::Identity();
  Vec3 Omega = Vec3::Zero();
};

// Everything that must be specified to evaluate the coupled dynamics.
struct SystemParams {
  PayloadParams payload;
  std::vector<QuadrotorParams> quads;
  std::vector<LinkSpec> links;

  int n() const { return static_cast<int>(links.size()); }

  // Fleet with identical vehicles on every link.
  static SystemParams homogeneous(const PayloadParams& payload,
                                  const QuadrotorParams& quad,
                                  std::vector<LinkSpec> links);

  // Throws BadCount when quads/links sizes differ or are empty, and
  // std::invalid_argument when any component fails its own validation or
  // vehicles disagree on g.
  void validate() const;

  double total_mass() const;

  // Common gravitational acceleration of the fleet.
  double gravity() const;
};

// Full configuration/velocity state of the coupled system.
struct SwarmState {
  Vec3 x0 = Vec3::Zero();
  Vec3 v0 = Vec3::Zero();
  Mat3 R0 = Mat3::Identity();
  Vec3 Omega0 = Vec3::Zero();
  std::vector<LinkState> links;
  std::vector<QuadAttitude> quads;

  int n() const { return static_cast<int>(links.size()); }

  // Throws BadCount on inconsistent sizes; std::invalid_argument when R0 or
  // any R_i is not a rotation, any q_i is not unit length, or any |q_i .
  // omega_i| exceeds kUnitTol.
  void validate() const;

  // Flat layout: [x0, v0, R0 (row-major), Omega0,
  //               per link (q_i, omega_i), per vehicle (R_i row-major,
  //               Omega_i)]; 18 * (n + 1) entries in total.
  Eigen::VectorXd to_vector() const;
  static SwarmState from_vector(const Eigen::VectorXd& v, int n);
};

// Thrust magnitude and body moment for each vehicle.
struct SwarmInput {
  std::vector<double> thrust;
  std::vector<Vec3> moment;

  int n() const { return static_cast<int>(thrust.size()); }

  // Throws BadCount unless both arrays have n entries.
  void validate(int n) const;
};

struct LinkDerivatives {
  Vec3 q_dot = Vec3::Zero();
  Vec3 omega_dot = Vec3::Zero();
};

struct QuadAttitudeDerivatives {
  Mat3 R_dot = Mat3::Zero();
  Vec3 Omega_dot = Vec3::Zero();
};

// Time derivative of SwarmState; shares its flat layout.
struct SwarmDerivatives {
  Vec3 x0_dot = Vec3::Zero();
  Vec3 v0_dot = Vec3::Zero();
  Mat3 R0_dot = Mat3::Zero();
  Vec3 Omega0_dot = Vec3::Zero();
  std::vector<LinkDerivatives> links;
  std::vector<QuadAttitudeDerivatives> quads;

  Eigen::VectorXd to_vector() const;
};

// Payload linear and angular acceleration.
struct PayloadAccel {
  Vec3 x0_ddot = Vec3::Zero();
  Vec3 Omega0_dot = Vec3::Zero();
};

// Thrust vector of vehicle i in the inertial frame, u_i = -f_i R_i e3.
Vec3 control_force(int i, const SwarmState& state, const SwarmInput& input);

// Splits u into the component along the unit vector q and the remainder:
// (q q^T u, (I - q q^T) u).
std::pair<Vec3, Vec3> control_decompose(const Vec3& u, const Vec3& q);

// Solves the coupled 6x6 system for the payload accelerations. Throws
// SingularMassMatrix when the system matrix is numerically singular
// (reciprocal condition estimate below 1e-12).
PayloadAccel payload_accel(const SwarmState& state, const SwarmInput& input,
                           const SystemParams& params);

// Residual of the payload equations at a candidate acceleration, returned as
// (translational, rotational). Zero (to solver precision) when accel solves
// the coupled system; used to cross-check equilibria and solutions.
std::pair<Vec3, Vec3> payload_equation_residuals(const SwarmState& state,
                                                 const SwarmInput& input,
                                                 const SystemParams& params,
                                                 const PayloadAccel& accel);

// Angular acceleration of link i given the payload accelerations and the
// off-axis thrust component u_perp of vehicle i.
Vec3 link_accel(int i, const SwarmState& state, const PayloadAccel& accel,
                const Vec3& u_perp, const SystemParams& params);

// Attitude dynamics of vehicle i: Omega_dot = J^{-1} (M - Omega x J Omega).
Vec3 quad_attitude_accel(int i, const SwarmState& state, const Vec3& M_i,
                         const QuadrotorParams& params);

// Full state derivative under the given per-vehicle inputs.
SwarmDerivatives swarm_derivatives(const SwarmState& state,
                                   const SwarmInput& input,
                                   const SystemParams& params);

// Vehicle positions and velocities implied by the payload and link states:
// x_i = x_0 + R_0 rho_i - l_i q_i and its time derivative.
std::vector<std::pair<Vec3, Vec3>> reconstruct_quads(
    const SwarmState& state, const std::vector<LinkSpec>& links);

// Inputs that hold the level hover exactly: every vehicle carries an equal
// share f_i = (m_0 + sum m_i) g / n, all moments zero.
SwarmInput hover_inputs(const SystemParams& params);

// The level hover state: payload at x0 with identity attitude, all links
// vertical (q_i = e3), everything at rest.
SwarmState hover_state(const SystemParams& params,
                       const Vec3& x0 = Vec3::Zero());

}  // namespace swarmsling

#endif  // SWARMSLING_SWARM_DYNAMICS_HPP

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

#include "swarmsling/swarm_dynamics.hpp"

#include <cmath>
#include <stdexcept>

#include "swarmsling/errors.hpp"

namespace swarmsling {

namespace {

using Mat6 = Eigen::Matrix<double, 6, 6>;
using Vec6 = Eigen::Matrix<double, 6, 1>;

// The coupled payload equations in the form A * (x0_ddot, Omega0_dot) = rhs.
//
// With P_i = q_i q_i^T projecting onto link i and
//   v_i = u_i^par + m_i P_i g e3 - m_i l_i |omega_i|^2 q_i
//         - m_i P_i R_0 hat(Omega_0)^2 rho_i
// collecting the thrust, gravity, link-swing and frame-rotation forces that
// vehicle i transmits through its link, the blocks are
//   [ m_0 I + sum m_i P_i          -sum m_i P_i R_0 hat(rho_i) ]
//   [ symmetric                     J_0 - sum m_i hat(rho_i) R_0^T P_i R_0 hat(rho_i) ]
// and the right-hand side is
//   ( m_0 g e3 + sum v_i,  -Omega_0 x J_0 Omega_0 + sum hat(rho_i) R_0^T v_i ).
struct PayloadSystem {
  Mat6 A;
  Vec6 rhs;
};

PayloadSystem build_payload_system(const SwarmState& state,
                                   const SwarmInput& input,
                                   const SystemParams& params) {
  const int n = params.n();
  const double g = params.gravity();
  const Mat3& R0 = state.R0;
  const Mat3 Om0_hat2 = hat(state.Omega0) * hat(state.Omega0);

  Mat3 M_q = params.payload.m0 * Mat3::Identity();
  Mat3 B = Mat3::Zero();
  Mat3 J_eff = params.payload.J0;
  Vec3 rhs_t = params.payload.m0 * g * kE3;
  Vec3 rhs_r = -state.Omega0.cross(params.payload.J0 * state.Omega0);

  for (int i = 0; i < n; ++i) {
    const double m_i = params.quads[i].m;
    const double l_i = params.links[i].l;
    const Vec3& q = state.links[i].q;
    const Vec3& omega = state.links[i].omega;
    const Mat3 P = q * q.transpose();
    const Mat3 rho_hat = hat(params.links[i].rho);
    const Mat3 P_R0 = P * R0;

    M_q += m_i * P;
    B += m_i * P_R0 * rho_hat;
    J_eff -= m_i * rho_hat * P_R0.transpose() * P_R0 * rho_hat;

    const Vec3 u = control_force(i, state, input);
    const Vec3 v_i = P * u + m_i * g * (P * kE3) -
                     m_i * l_i * omega.squaredNorm() * q -
                     m_i * (P_R0 * (Om0_hat2 * params.links[i].rho));
    rhs_t += v_i;
    rhs_r += rho_hat * (R0.transpose() * v_i);
  }

  PayloadSystem sys;
  sys.A.topLeftCorner<3, 3>() = M_q;
  sys.A.topRightCorner<3, 3>() = -B;
  sys.A.bottomLeftCorner<3, 3>() = -B.transpose();
  sys.A.bottomRightCorner<3, 3>() = J_eff;
  sys.rhs.head<3>() = rhs_t;
  sys.rhs.tail<3>() = rhs_r;
  return sys;
}

}  // namespace

void PayloadParams::validate() const {
  if (!(m0 > 0.0)) {
    throw std::invalid_argument("PayloadParams: mass must be positive");
  }
  if (!(dims.minCoeff() > 0.0)) {
    throw std::invalid_argument("PayloadParams: dims must be positive");
  }
  if ((J0 - J0.transpose()).norm() > 1e-9) {
    throw std::invalid_argument("PayloadParams: inertia must be symmetric");
  }
  Eigen::SelfAdjointEigenSolver<Mat3> eig(J0);
  if (eig.eigenvalues().minCoeff() <= 0.0) {
    throw std::invalid_argument(
        "PayloadParams: inertia must be positive definite");
  }
}

Mat3 PayloadParams::box_inertia(double mass, const Vec3& dims) {
  const double lx2 = dims.x() * dims.x();
  const double ly2 = dims.y() * dims.y();
  const double lz2 = dims.z() * dims.z();
  return (mass / 12.0) *
         Vec3{ly2 + lz2, lx2 + lz2, lx2 + ly2}.asDiagonal().toDenseMatrix();
}

SystemParams SystemParams::homogeneous(const PayloadParams& payload,
                                       const QuadrotorParams& quad,
                                       std::vector<LinkSpec> links) {
  SystemParams p;
  p.payload = payload;
  p.quads.assign(links.size(), quad);
  p.links = std::move(links);
  return p;
}

void SystemParams::validate() const {
  if (links.empty() || quads.size() != links.size()) {
    throw BadCount("SystemParams: need one vehicle per link");
  }
  payload.validate();
  for (const QuadrotorParams& q : quads) {
    q.validate();
    if (q.g != quads.front().g) {
      throw std::invalid_argument("SystemParams: vehicles disagree on g");
    }
  }
  for (const LinkSpec& link : links) {
    if (!(link.l > 0.0)) {
      throw std::invalid_argument(
          "SystemParams: link lengths must be positive");
    }
  }
}

double SystemParams::total_mass() const {
  double total = payload.m0;
  for (const QuadrotorParams& q : quads) {
    total += q.m;
  }
  return total;
}

double SystemParams::gravity() const {
  if (quads.empty()) {
    throw BadCount("SystemParams: no vehicles");
  }
  return quads.front().g;
}

void SwarmState::validate() const {
  if (links.empty() || quads.size() != links.size()) {
    throw BadCount("SwarmState: need one vehicle per link");
  }
  if (!is_rotation(R0)) {
    throw std::invalid_argument("SwarmState: R0 is not a rotation matrix");
  }
  for (int i = 0; i < n(); ++i) {
    if (!is_unit(links[i].q)) {
      throw std::invalid_argument("SwarmState: link direction not unit");
    }
    if (std::abs(links[i].q.dot(links[i].omega)) > kUnitTol) {
      throw std::invalid_argument(
          "SwarmState: link angular velocity not orthogonal to link");
    }
    if (!is_rotation(quads[i].R)) {
      throw std::invalid_argument(
          "SwarmState: vehicle attitude is not a rotation matrix");
    }
  }
}

Eigen::VectorXd SwarmState::to_vector() const {
  const int count = n();
  Eigen::VectorXd v(18 * (count + 1));
  v.segment<3>(0) = x0;
  v.segment<3>(3) = v0;
  v.segment<9>(6) = Eigen::Map<const Eigen::VectorXd>(
      Mat3(R0.transpose()).data(), 9);  // row-major
  v.segment<3>(15) = Omega0;
  int at = 18;
  for (int i = 0; i < count; ++i) {
    v.segment<3>(at) = links[i].q;
    v.segment<3>(at + 3) = links[i].omega;
    at += 6;
  }
  for (int i = 0; i < count; ++i) {
    v.segment<9>(at) =
        Eigen::Map<const Eigen::VectorXd>(Mat3(quads[i].R.transpose()).data(), 9);
    v.segment<3>(at + 9) = quads[i].Omega;
    at += 12;
  }
  return v;
}

SwarmState SwarmState::from_vector(const Eigen::VectorXd& v, int n) {
  if (n < 1 || v.size() != 18 * (n + 1)) {
    throw BadCount("SwarmState::from_vector: wrong vector size");
  }
  SwarmState s;
  s.x0 = v.segment<3>(0);
  s.v0 = v.segment<3>(3);
  s.R0 = Eigen::Map<const Eigen::Matrix<double, 3, 3, Eigen::RowMajor>>(
      v.segment<9>(6).data());
  s.Omega0 = v.segment<3>(15);
  s.links.resize(n);
  s.quads.resize(n);
  int at = 18;
  for (int i = 0; i < n; ++i) {
    s.links[i].q = v.segment<3>(at);
    s.links[i].omega = v.segment<3>(at + 3);
    at += 6;
  }
  for (int i = 0; i < n; ++i) {
    s.quads[i].R = Eigen::Map<const Eigen::Matrix<double, 3, 3, Eigen::RowMajor>>(
        v.segment<9>(at).data());
    s.quads[i].Omega = v.segment<3>(at + 9);
    at += 12;
  }
  return s;
}

void SwarmInput::validate(int n) const {
  if (n < 1 || static_cast<int>(thrust.size()) != n ||
      static_cast<int>(moment.size()) != n) {
    throw BadCount("SwarmInput: need one thrust and moment per vehicle");
  }
}

Eigen::VectorXd SwarmDerivatives::to_vector() const {
  const int count = static_cast<int>(links.size());
  Eigen::VectorXd v(18 * (count + 1));
  v.segment<3>(0) = x0_dot;
  v.segment<3>(3) = v0_dot;
  v.segment<9>(6) =
      Eigen::Map<const Eigen::VectorXd>(Mat3(R0_dot.transpose()).data(), 9);
  v.segment<3>(15) = Omega0_dot;
  int at = 18;
  for (int i = 0; i < count; ++i) {
    v.segment<3>(at) = links[i].q_dot;
    v.segment<3>(at + 3) = links[i].omega_dot;
    at += 6;
  }
  for (int i = 0; i < count; ++i) {
    v.segment<9>(at) = Eigen::Map<const Eigen::VectorXd>(
        Mat3(quads[i].R_dot.transpose()).data(), 9);
    v.segment<3>(at + 9) = quads[i].Omega_dot;
    at += 12;
  }
  return v;
}

Vec3 control_force(int i, const SwarmState& state, const SwarmInput& input) {
  return -input.thrust[i] * (state.quads[i].R * kE3);
}

std::pair<Vec3, Vec3> control_decompose(const Vec3& u, const Vec3& q) {
  const Vec3 parallel = q.dot(u) * q;
  return {parallel, u - parallel};
}

PayloadAccel payload_accel(const SwarmState& state, const SwarmInput& input,
                           const SystemParams& params) {
  const PayloadSystem sys = build_payload_system(state, input, params);
  Eigen::PartialPivLU<Mat6> lu(sys.A);
  // An exactly singular factorization yields a NaN condition estimate, so
  // the comparison is written to reject non-finite values as well.
  if (!(lu.rcond() >= 1e-12)) {
    throw SingularMassMatrix("payload_accel: coupled mass matrix singular");
  }
  const Vec6 xi = lu.solve(sys.rhs);
  PayloadAccel accel;
  accel.x0_ddot = xi.head<3>();
  accel.Omega0_dot = xi.tail<3>();
  return accel;
}

std::pair<Vec3, Vec3> payload_equation_residuals(const SwarmState& state,
                                                 const SwarmInput& input,
                                                 const SystemParams& params,
                                                 const PayloadAccel& accel) {
  const PayloadSystem sys = build_payload_system(state, input, params);
  Vec6 xi;
  xi.head<3>() = accel.x0_ddot;
  xi.tail<3>() = accel.Omega0_dot;
  const Vec6 res = sys.A * xi - sys.rhs;
  return {res.head<3>(), res.tail<3>()};
}

Vec3 link_accel(int i, const SwarmState& state, const PayloadAccel& accel,
                const Vec3& u_perp, const SystemParams& params) {
  const double l = params.links[i].l;
  const double m = params.quads[i].m;
  const double g = params.gravity();
  const Vec3& rho = params.links[i].rho;
  const Mat3 Om0_hat = hat(state.Omega0);
  // Acceleration of the attachment point on the payload.
  const Vec3 attach_acc =
      accel.x0_ddot +
      state.R0 * (Om0_hat * (Om0_hat * rho) + accel.Omega0_dot.cross(rho));
  const Vec3& q = state.links[i].q;
  return (1.0 / l) * q.cross(attach_acc - g * kE3) -
         (1.0 / (m * l)) * q.cross(u_perp);
}

Vec3 quad_attitude_accel(int i, const SwarmState& state, const Vec3& M_i,
                         const QuadrotorParams& params) {
  const Vec3& Omega = state.quads[i].Omega;
  return params.J.ldlt().solve(M_i - Omega.cross(params.J * Omega));
}

SwarmDerivatives swarm_derivatives(const SwarmState& state,
                                   const SwarmInput& input,
                                   const SystemParams& params) {
  const int n = state.n();
  if (params.n() != n) {
    throw BadCount("swarm_derivatives: params/state vehicle counts differ");
  }
  input.validate(n);

  const PayloadAccel accel = payload_accel(state, input, params);

  SwarmDerivatives d;
  d.x0_dot = state.v0;
  d.v0_dot = accel.x0_ddot;
  d.R0_dot = state.R0 * hat(state.Omega0);
  d.Omega0_dot = accel.Omega0_dot;
  d.links.resize(n);
  d.quads.resize(n);
  for (int i = 0; i < n; ++i) {
    const Vec3 u = control_force(i, state, input);
    const auto [u_par, u_perp] = control_decompose(u, state.links[i].q);
    (void)u_par;
    d.links[i].q_dot = state.links[i].omega.cross(state.links[i].q);
    d.links[i].omega_dot = link_accel(i, state, accel, u_perp, params);
    d.quads[i].R_dot = state.quads[i].R * hat(state.quads[i].Omega);
    d.quads[i].Omega_dot =
        quad_attitude_accel(i, state, input.moment[i], params.quads[i]);
  }
  return d;
}

std::vector<std::pair<Vec3, Vec3>> reconstruct_quads(
    const SwarmState& state, const std::vector<LinkSpec>& links) {
  if (static_cast<int>(links.size()) != state.n()) {
    throw BadCount("reconstruct_quads: link count mismatch");
  }
  std::vector<std::pair<Vec3, Vec3>> out(links.size());
  const Mat3 R0_Om0 = state.R0 * hat(state.Omega0);
  for (int i = 0; i < state.n(); ++i) {
    const Vec3& q = state.links[i].q;
    const Vec3 q_dot = state.links[i].omega.cross(q);
    out[i].first = state.x0 + state.R0 * links[i].rho - links[i].l * q;
    out[i].second = state.v0 + R0_Om0 * links[i].rho - links[i].l * q_dot;
  }
  return out;
}

SwarmInput hover_inputs(const SystemParams& params) {
  params.validate();
  const int n = params.n();
  SwarmInput input;
  input.thrust.assign(n, params.total_mass() * params.gravity() / n);
  input.moment.assign(n, Vec3::Zero());
  return input;
}

SwarmState hover_state(const SystemParams& params, const Vec3& x0) {
  SwarmState s;
  s.x0 = x0;
  s.links.assign(params.n(), LinkState{});
  s.quads.assign(params.n(), QuadAttitude{});
  return s;
}

}  // namespace swarmsling

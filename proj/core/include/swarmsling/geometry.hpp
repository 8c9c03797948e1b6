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

// Rotation-group primitives shared by the controllers and the dynamics.
//
// Frame convention used across the library: inertial axes are x-forward,
// y-right, z-DOWN, so gravity points along +e3 and a hovering body's thrust
// points along -z. All rotation matrices map body coordinates to inertial
// coordinates.

#ifndef SWARMSLING_GEOMETRY_HPP
#define SWARMSLING_GEOMETRY_HPP

#include <Eigen/Dense>

namespace swarmsling {

using Vec3 = Eigen::Vector3d;
using Mat3 = Eigen::Matrix3d;

// Inertial down axis; gravity is +g * e3 in this convention.
inline const Vec3 kE3{0.0, 0.0, 1.0};

// Orthonormality tolerance used when checking rotation matrices.
inline constexpr double kRotationTol = 1e-9;
// Norm tolerance used when checking unit vectors.
inline constexpr double kUnitTol = 1e-9;
// Skew-symmetry tolerance accepted by vee().
inline constexpr double kSkewTol = 1e-9;

// Skew-symmetric matrix of v, i.e. hat(v) * w == v.cross(w) for all w.
Mat3 hat(const Vec3& v);

// Inverse of hat(). Throws NonSkewInput if ||m + m^T||_F exceeds kSkewTol.
Vec3 vee(const Mat3& m);

// True if m is orthonormal with determinant +1 within tol.
bool is_rotation(const Mat3& m, double tol = kRotationTol);

// True if ||v| - 1| <= tol.
bool is_unit(const Vec3& v, double tol = kUnitTol);

// Configuration error 0.5 * trace(I - R_d^T * R). Ranges over [0, 2]; values
// below 2 identify an attitude within the stability basin of the tracking
// controller.
double attitude_error_fn(const Mat3& R, const Mat3& R_d);

// Attitude error vector 0.5 * vee(R_d^T R - R^T R_d). Together with
// attitude_error_fn it satisfies d/dt Psi = e_R . (body angular velocity)
// along rotations of R.
Vec3 attitude_error_vec(const Mat3& R, const Mat3& R_d);

// Angular velocity error Omega - R^T R_d Omega_d, expressed in the body frame
// of R.
Vec3 angular_velocity_error(const Mat3& R, const Mat3& R_d, const Vec3& Omega,
                            const Vec3& Omega_d);

// Nearest rotation matrix in the Frobenius sense (polar factor via SVD, with
// the sign of the smallest singular vector flipped if needed to reach
// determinant +1). Throws DegenerateMatrix when |det(m)| <= 1e-12.
Mat3 project_to_rotation(const Mat3& m);

// Exponential map of so(3) via Rodrigues' formula, with series fallbacks for
// small angles.
Mat3 exp_so3(const Vec3& v);

}  // namespace swarmsling

#endif  // SWARMSLING_GEOMETRY_HPP

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

#ifndef SWARMSLING_TRAJECTORY_HPP
#define SWARMSLING_TRAJECTORY_HPP

#include <functional>
#include <string>

#include "swarmsling/geometry.hpp"

namespace swarmsling {

// Desired flat outputs for the position/attitude tracking controller at one
// instant: position and its first four derivatives, plus the desired heading
// axis b1_d (unit, not parallel to the thrust axis) and its first two
// derivatives. Jerk, snap and the heading rates feed the attitude loop's
// feedforward; leaving them zero is safe for slow references.
struct TrajectorySample {
  Vec3 x_d = Vec3::Zero();
  Vec3 v_d = Vec3::Zero();
  Vec3 a_d = Vec3::Zero();
  Vec3 j_d = Vec3::Zero();
  Vec3 s_d = Vec3::Zero();
  Vec3 b1_d = Vec3::UnitX();
  Vec3 b1_d_dot = Vec3::Zero();
  Vec3 b1_d_ddot = Vec3::Zero();
};

// Time-parametrized reference. Built-in shapes are analytic; tabulated
// references interpolate linearly between samples and clamp outside the
// sampled range.
class DesiredTrajectory {
 public:
  DesiredTrajectory() : DesiredTrajectory(hover(Vec3::Zero())) {}

  // Constant set point with fixed heading.
  static DesiredTrajectory hover(const Vec3& point,
                                 const Vec3& b1 = Vec3::UnitX());

  // Horizontal circle about `center` traversed once per `period` seconds,
  // starting at center + (radius, 0, 0).
  static DesiredTrajectory circle(const Vec3& center, double radius,
                                  double period,
                                  const Vec3& b1 = Vec3::UnitX());

  // Constant-velocity segment from `from` to `to` over `duration` seconds,
  // holding the end points outside [0, duration].
  static DesiredTrajectory line(const Vec3& from, const Vec3& to,
                                double duration,
                                const Vec3& b1 = Vec3::UnitX());

  // Tabulated reference read from a CSV file with header
  //   t,xd1,xd2,xd3,vd1,vd2,vd3,ad1,ad2,ad3,b1d1,b1d2,b1d3
  // Rows must be sorted by strictly increasing t. Throws std::runtime_error
  // on malformed files.
  static DesiredTrajectory from_table_csv(const std::string& path);

  TrajectorySample at(double t) const { return fn_(t); }

 private:
  explicit DesiredTrajectory(std::function<TrajectorySample(double)> fn)
      : fn_(std::move(fn)) {}

  std::function<TrajectorySample(double)> fn_;
};

}  // namespace swarmsling

#endif  // SWARMSLING_TRAJECTORY_HPP

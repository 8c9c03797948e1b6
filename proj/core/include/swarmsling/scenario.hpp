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

// A complete, serializable description of one swarm simulation: physical
// parameters, fleet layout, initial perturbations, input policy and
// integrator settings. The stock scenario is a three-vehicle level hover of
// a 1.5 kg box slung on 1 m links.

#ifndef SWARMSLING_SCENARIO_HPP
#define SWARMSLING_SCENARIO_HPP

#include <string>
#include <vector>

#include "swarmsling/config_planner.hpp"
#include "swarmsling/integrator.hpp"
#include "swarmsling/swarm_dynamics.hpp"

namespace swarmsling {

struct SimScenario {
  PayloadParams payload;
  QuadrotorParams quad;

  int fleet_count = 3;
  double link_length_m = 1.0;
  // With the Side policy a three-vehicle fleet attaches at the corners of a
  // triangle whose side equals the payload's smaller footprint edge.
  RadiusPolicy radius_policy = RadiusPolicy::Side;

  Gains gains;

  // Initial-condition perturbations applied to the level hover.
  Vec3 payload_offset_m = Vec3::Zero();
  Vec3 payload_attitude_axis_angle = Vec3::Zero();
  // Tilts every link away from vertical about the inertial y axis.
  double link_tilt_rad = 0.0;

  // "hover" applies the exact equilibrium inputs; "attitude_hold" keeps the
  // same thrusts but closes each vehicle's attitude loop around level.
  std::string input_policy = "hover";
  // Per-vehicle thrust scaling (empty = all 1); used to study degraded
  // vehicles.
  std::vector<double> thrust_scale;

  IntegratorConfig integrator;

  // The stock three-vehicle hover study.
  static SimScenario defaults();

  // Loads a scenario from JSON, starting from defaults() and overriding any
  // provided keys. Unknown keys are rejected. Throws std::runtime_error on
  // unreadable or malformed files.
  static SimScenario from_json_file(const std::string& path);

  // Fleet parameters with attachments from the radius policy.
  SystemParams system() const;

  // Level hover with the configured perturbations applied.
  SwarmState initial_state() const;

  // Equilibrium thrust shares, scaled per vehicle by thrust_scale.
  SwarmInput inputs() const;

  // The configured input policy over the configured system.
  InputPolicy policy() const;
};

}  // namespace swarmsling

#endif  // SWARMSLING_SCENARIO_HPP

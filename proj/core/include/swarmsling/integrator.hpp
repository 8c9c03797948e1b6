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

// Fixed-step RK4 over flattened states, with periodic retraction of rotation
// matrices and link directions back onto their manifolds. Runs are
// deterministic: the same inputs produce bit-identical trajectories.

#ifndef SWARMSLING_INTEGRATOR_HPP
#define SWARMSLING_INTEGRATOR_HPP

#include <functional>

#include <Eigen/Dense>

#include "swarmsling/quadrotor.hpp"
#include "swarmsling/swarm_dynamics.hpp"
#include "swarmsling/timeseries.hpp"
#include "swarmsling/trajectory.hpp"

namespace swarmsling {

// Any state component beyond this magnitude aborts a run with Diverged.
inline constexpr double kDivergenceLimit = 1e6;

struct IntegratorConfig {
  double dt = 1e-3;
  double t_final = 10.0;
  // Retract after every k-th step; 0 disables retraction entirely.
  int retraction_every = 1;
  // Single-quadrotor runs only: when true, rotor commands are clipped to
  // [0, T_max] each and the realized wrench is the remix of the clipped
  // thrusts; when false the commanded wrench is applied exactly and rotor
  // limits are merely logged in saturated_steps. The plant model itself
  // knows nothing about actuator limits, so the choice sits with the caller.
  bool enforce_rotor_limits = true;

  // Throws std::invalid_argument unless dt > 0, t_final >= 0 and
  // retraction_every >= 0. t_final is interpreted as the nearest whole
  // number of steps; t_final = 0 records only the initial sample.
  void validate() const;

  int steps() const;
};

using DerivFn =
    std::function<Eigen::VectorXd(double, const Eigen::VectorXd&)>;

// One classical Runge-Kutta step of size dt from (t, y).
Eigen::VectorXd rk4_step(const DerivFn& f, double t, const Eigen::VectorXd& y,
                         double dt);

// Projects the state back onto its manifolds: rotations to the nearest
// rotation matrix, link directions to unit length, link angular velocities
// to the plane orthogonal to their (renormalized) links.
void retract(SwarmState& state);
void retract(QuadState& state);

// Per-step input selection for a swarm run; the returned input is held over
// the whole step (zero-order hold).
using InputPolicy = std::function<SwarmInput(double, const SwarmState&)>;

// Applies the same input at every step.
InputPolicy constant_policy(SwarmInput input);

// Holds the given per-vehicle thrusts while each vehicle's moment loop
// regulates its attitude to identity (level).
InputPolicy attitude_hold_policy(const SystemParams& params,
                                 const Gains& gains,
                                 std::vector<double> thrust);

// Integrates the coupled swarm dynamics, recording every step. Throws
// Diverged when a state component passes kDivergenceLimit and propagates
// validation errors from the inputs.
TimeSeries simulate(const SwarmState& initial, const InputPolicy& policy,
                    const SystemParams& params, const IntegratorConfig& config);

// Closed-loop single-vehicle tracking run: at each step the controller is
// evaluated against the reference and rotor thrusts are clipped to
// [0, T_max] each. When the config enforces rotor limits the remixed wrench
// of the clipped thrusts drives the plant; otherwise the commanded wrench is
// applied exactly and clipping is only recorded in saturated_steps.
QuadTimeSeries simulate_quadrotor(const QuadState& initial,
                                  const DesiredTrajectory& reference,
                                  const Gains& gains,
                                  const QuadrotorParams& params,
                                  const IntegratorConfig& config);

}  // namespace swarmsling

#endif  // SWARMSLING_INTEGRATOR_HPP

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

#include "swarmsling/integrator.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

#include "swarmsling/errors.hpp"
#include "swarmsling/geometry.hpp"

namespace swarmsling {

namespace {

void check_in_bounds(const Eigen::VectorXd& y, double t) {
  if (!y.allFinite() || y.cwiseAbs().maxCoeff() > kDivergenceLimit) {
    throw Diverged("simulation diverged at t = " + std::to_string(t));
  }
}

Eigen::VectorXd quad_to_vector(const QuadState& s) {
  Eigen::VectorXd y(18);
  y.segment<3>(0) = s.x;
  y.segment<3>(3) = s.v;
  y.segment<9>(6) =
      Eigen::Map<const Eigen::VectorXd>(Mat3(s.R.transpose()).data(), 9);
  y.segment<3>(15) = s.Omega;
  return y;
}

QuadState quad_from_vector(const Eigen::VectorXd& y) {
  QuadState s;
  s.x = y.segment<3>(0);
  s.v = y.segment<3>(3);
  s.R = Eigen::Map<const Eigen::Matrix<double, 3, 3, Eigen::RowMajor>>(
      y.segment<9>(6).data());
  s.Omega = y.segment<3>(15);
  return s;
}

}  // namespace

void IntegratorConfig::validate() const {
  if (!(dt > 0.0)) {
    throw std::invalid_argument("IntegratorConfig: dt must be positive");
  }
  if (!(t_final >= 0.0)) {
    throw std::invalid_argument(
        "IntegratorConfig: t_final must be nonnegative");
  }
  if (retraction_every < 0) {
    throw std::invalid_argument(
        "IntegratorConfig: retraction_every must be nonnegative");
  }
}

int IntegratorConfig::steps() const {
  return static_cast<int>(std::llround(t_final / dt));
}

Eigen::VectorXd rk4_step(const DerivFn& f, double t, const Eigen::VectorXd& y,
                         double dt) {
  const Eigen::VectorXd k1 = f(t, y);
  const Eigen::VectorXd k2 = f(t + dt / 2.0, y + (dt / 2.0) * k1);
  const Eigen::VectorXd k3 = f(t + dt / 2.0, y + (dt / 2.0) * k2);
  const Eigen::VectorXd k4 = f(t + dt, y + dt * k3);
  return y + (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
}

void retract(SwarmState& state) {
  state.R0 = project_to_rotation(state.R0);
  for (LinkState& link : state.links) {
    link.q.normalize();
    link.omega -= link.q.dot(link.omega) * link.q;
  }
  for (QuadAttitude& quad : state.quads) {
    quad.R = project_to_rotation(quad.R);
  }
}

void retract(QuadState& state) { state.R = project_to_rotation(state.R); }

InputPolicy constant_policy(SwarmInput input) {
  return [input = std::move(input)](double, const SwarmState&) {
    return input;
  };
}

InputPolicy attitude_hold_policy(const SystemParams& params,
                                 const Gains& gains,
                                 std::vector<double> thrust) {
  if (static_cast<int>(thrust.size()) != params.n()) {
    throw BadCount("attitude_hold_policy: one thrust per vehicle");
  }
  gains.validate();
  return [quads = params.quads, gains,
          thrust = std::move(thrust)](double, const SwarmState& state) {
    SwarmInput input;
    input.thrust = thrust;
    input.moment.resize(state.n());
    for (int i = 0; i < state.n(); ++i) {
      input.moment[i] = moment_command(state.quads[i].R, Mat3::Identity(),
                                       state.quads[i].Omega, Vec3::Zero(),
                                       Vec3::Zero(), gains, quads[i]);
    }
    return input;
  };
}

TimeSeries simulate(const SwarmState& initial, const InputPolicy& policy,
                    const SystemParams& params,
                    const IntegratorConfig& config) {
  config.validate();
  params.validate();
  initial.validate();
  if (initial.n() != params.n()) {
    throw BadCount("simulate: params/state vehicle counts differ");
  }

  const int n = params.n();
  const int steps = config.steps();

  TimeSeries series;
  series.t.reserve(steps + 1);
  series.states.reserve(steps + 1);
  series.inputs.reserve(steps);

  SwarmState state = initial;
  series.t.push_back(0.0);
  series.states.push_back(state);

  for (int k = 0; k < steps; ++k) {
    const double t = k * config.dt;
    const SwarmInput input = policy(t, state);
    input.validate(n);

    const DerivFn f = [&](double, const Eigen::VectorXd& y) {
      return swarm_derivatives(SwarmState::from_vector(y, n), input, params)
          .to_vector();
    };
    const Eigen::VectorXd y = rk4_step(f, t, state.to_vector(), config.dt);
    const double t_next = (k + 1) * config.dt;
    check_in_bounds(y, t_next);

    state = SwarmState::from_vector(y, n);
    if (config.retraction_every > 0 &&
        (k + 1) % config.retraction_every == 0) {
      retract(state);
    }
    series.t.push_back(t_next);
    series.states.push_back(state);
    series.inputs.push_back(input);
  }
  return series;
}

QuadTimeSeries simulate_quadrotor(const QuadState& initial,
                                  const DesiredTrajectory& reference,
                                  const Gains& gains,
                                  const QuadrotorParams& params,
                                  const IntegratorConfig& config) {
  config.validate();
  params.validate();
  gains.validate();
  initial.validate();

  const int steps = config.steps();
  const double rotor_max = params.T_max;

  QuadTimeSeries series;
  series.t.reserve(steps + 1);
  series.states.reserve(steps + 1);
  series.outputs.reserve(steps);
  series.rotor_thrusts.reserve(steps);

  QuadState state = initial;
  series.t.push_back(0.0);
  series.states.push_back(state);

  for (int k = 0; k < steps; ++k) {
    const double t = k * config.dt;
    const TrackOutput out =
        track_step(state, reference.at(t), gains, params);

    const Vec4 ideal = mix_thrusts(WrenchCommand{out.f, out.M}, params);
    const Vec4 rotors = ideal.cwiseMax(0.0).cwiseMin(rotor_max);
    if (rotors != ideal) {
      ++series.saturated_steps;
    }
    WrenchCommand applied{out.f, out.M};
    if (config.enforce_rotor_limits) {
      const Vec4 realized = mixer_matrix(params) * rotors;
      applied = WrenchCommand{realized(0), realized.segment<3>(1)};
    }

    const DerivFn f = [&](double, const Eigen::VectorXd& y) {
      const QuadState s = quad_from_vector(y);
      const QuadDerivatives d = quad_derivatives(s, applied, params);
      Eigen::VectorXd dy(18);
      dy.segment<3>(0) = d.x_dot;
      dy.segment<3>(3) = d.v_dot;
      dy.segment<9>(6) = Eigen::Map<const Eigen::VectorXd>(
          Mat3(d.R_dot.transpose()).data(), 9);
      dy.segment<3>(15) = d.Omega_dot;
      return dy;
    };
    const Eigen::VectorXd y =
        rk4_step(f, t, quad_to_vector(state), config.dt);
    const double t_next = (k + 1) * config.dt;
    check_in_bounds(y, t_next);

    state = quad_from_vector(y);
    if (config.retraction_every > 0 &&
        (k + 1) % config.retraction_every == 0) {
      retract(state);
    }
    series.t.push_back(t_next);
    series.states.push_back(state);
    series.outputs.push_back(out);
    series.rotor_thrusts.push_back(config.enforce_rotor_limits ? rotors
                                                               : ideal);
  }
  return series;
}

}  // namespace swarmsling

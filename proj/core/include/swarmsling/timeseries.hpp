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

// Recorded simulations and their CSV forms. All numeric output is %.17g, so
// a write/read round trip reproduces every double bit-for-bit.

#ifndef SWARMSLING_TIMESERIES_HPP
#define SWARMSLING_TIMESERIES_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "swarmsling/quadrotor.hpp"
#include "swarmsling/swarm_dynamics.hpp"

namespace swarmsling {

// Sampled swarm simulation: one state per sample time, plus the input held
// over each step (inputs.size() == t.size() - 1 for a recorded run).
struct TimeSeries {
  std::vector<double> t;
  std::vector<SwarmState> states;
  std::vector<SwarmInput> inputs;

  int n() const { return states.empty() ? 0 : states.front().n(); }
};

// Writes one row per sample:
//   t, payload position/velocity, R0 row-major, Omega0, then per vehicle i
//   (1-based): link direction q_i, link angular velocity w_i, vehicle
//   position x_i (reconstructed from the payload and link states), R_i
//   row-major, Omega_i.
// Header names follow that order: t,x0x,...,W0z,q1x,...,W1_z,q2x,...
// Throws std::runtime_error when the file cannot be written.
void write_series_csv(const std::string& path, const TimeSeries& series,
                      const std::vector<LinkSpec>& links);

// Reads a file produced by write_series_csv back into states (the derived
// vehicle-position columns are checked for presence, not consistency).
// Throws std::runtime_error on malformed content. No physical validation is
// performed; see check_series.
TimeSeries read_series_csv(const std::string& path);

// Outcome of a per-row invariant sweep. `row` is the 1-based data row of the
// first violation when ok is false.
struct CheckReport {
  bool ok = true;
  std::size_t row = 0;
  std::string message;
};

// Verifies every sample: link directions unit within tol, link angular
// velocities orthogonal to their links within tol, payload and vehicle
// rotation matrices orthonormal within tol.
CheckReport check_series(const TimeSeries& series, double tol = kRotationTol);

// Sampled single-vehicle tracking run: states at every sample time, the
// controller evaluation and the realized (saturated) rotor thrusts for every
// step, and how many steps hit the rotor limits.
struct QuadTimeSeries {
  std::vector<double> t;
  std::vector<QuadState> states;
  std::vector<TrackOutput> outputs;
  std::vector<Vec4> rotor_thrusts;
  int saturated_steps = 0;
};

// Writes one row per step with header
//   t,exx,exy,exz,evx,evy,evz,Psi,eRx,eRy,eRz,eWx,eWy,eWz,f,Mx,My,Mz,
//   f1,f2,f3,f4
// where f and M are the commanded wrench and f1..f4 the realized rotor
// thrusts after saturation.
void write_track_csv(const std::string& path, const QuadTimeSeries& series);

}  // namespace swarmsling

#endif  // SWARMSLING_TIMESERIES_HPP

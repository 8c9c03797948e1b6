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

// The four swarmsling subcommands. Exit codes:
//   0  success (plan: Feasible)
//   1  malformed input (flags, files)
//   2  plan: FeasibleWithCaution
//   3  plan: Infeasible; check: invariant violation
//   4  hover/track: simulation diverged

#ifndef SWARMSLING_CLI_COMMANDS_HPP
#define SWARMSLING_CLI_COMMANDS_HPP

#include <optional>
#include <string>

namespace swarmsling::cli {

struct PlanOptions {
  double payload_weight_n = 0.0;
  double quad_weight_n = 0.0;
  double thrust_n = 0.0;
  double quad_radius_m = 0.0;
  std::string dims_m = "1x0.8x0.2";  // LxWxH
  double safety_factor = 1.2;
  double hover_height_m = 1.0;
  std::string radius_policy = "circumradius";
  std::string out;  // JSON path; stdout when empty
};

struct HoverOptions {
  std::string scenario;  // JSON path; stock scenario when empty
  std::string out;       // CSV path; none when empty
  std::optional<double> t_final_s;
  std::optional<double> dt_s;
};

struct TrackOptions {
  std::string scenario;  // JSON path for vehicle parameters and gains
  std::string traj = "hover";  // hover | circle | line | table
  std::string table;           // CSV path for --traj table
  std::string point = "0,0,0";
  std::string center = "0,0,0";
  double radius_m = 1.0;
  double period_s = 8.0;
  std::string from = "0,0,0";
  std::string to = "1,0,0";
  double duration_s = 5.0;
  std::string b1 = "1,0,0";
  std::string offset_m = "0,0,0";
  std::string attitude_axis_angle = "0,0,0";
  double t_final_s = 10.0;
  double dt_s = 1e-3;
  // Apply the commanded wrench exactly instead of remixing clipped rotor
  // thrusts; saturation is still counted in the summary.
  bool ideal_actuation = false;
  std::string out;  // CSV path; none when empty
};

struct CheckOptions {
  std::string csv;
  double tol = 1e-9;
};

int cmd_plan(const PlanOptions& opt);
int cmd_hover(const HoverOptions& opt);
int cmd_track(const TrackOptions& opt);
int cmd_check(const CheckOptions& opt);

// Full command-line entry point (parses argv and dispatches).
int run(int argc, char** argv);

}  // namespace swarmsling::cli

#endif  // SWARMSLING_CLI_COMMANDS_HPP

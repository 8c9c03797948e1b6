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

#include "commands.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <stdexcept>
#include <vector>

#include <CLI11.hpp>

#include "swarmsling/config_planner.hpp"
#include "swarmsling/errors.hpp"
#include "swarmsling/integrator.hpp"
#include "swarmsling/scenario.hpp"
#include "swarmsling/timeseries.hpp"

namespace swarmsling::cli {

namespace {

constexpr int kOk = 0;
constexpr int kBadInput = 1;
constexpr int kCaution = 2;
constexpr int kInfeasible = 3;
constexpr int kDiverged = 4;

Vec3 parse_triplet(const std::string& text, char sep, const char* what) {
  Vec3 v;
  std::size_t start = 0;
  for (int i = 0; i < 3; ++i) {
    const std::size_t end =
        i < 2 ? text.find(sep, start) : std::string::npos;
    if (i < 2 && end == std::string::npos) {
      throw std::runtime_error(std::string(what) +
                               ": expected three values separated by '" +
                               sep + "'");
    }
    const std::string field = text.substr(start, end - start);
    try {
      std::size_t used = 0;
      v(i) = std::stod(field, &used);
      if (used != field.size()) {
        throw std::invalid_argument(field);
      }
    } catch (const std::exception&) {
      throw std::runtime_error(std::string(what) + ": not a number: '" +
                               field + "'");
    }
    start = end + 1;
  }
  return v;
}

SimScenario load_scenario(const std::string& path) {
  return path.empty() ? SimScenario::defaults()
                      : SimScenario::from_json_file(path);
}

DesiredTrajectory build_trajectory(const TrackOptions& opt) {
  const Vec3 b1 = parse_triplet(opt.b1, ',', "--b1");
  if (opt.traj == "hover") {
    return DesiredTrajectory::hover(parse_triplet(opt.point, ',', "--point"),
                                    b1);
  }
  if (opt.traj == "circle") {
    return DesiredTrajectory::circle(parse_triplet(opt.center, ',', "--center"),
                                     opt.radius_m, opt.period_s, b1);
  }
  if (opt.traj == "line") {
    return DesiredTrajectory::line(parse_triplet(opt.from, ',', "--from"),
                                   parse_triplet(opt.to, ',', "--to"),
                                   opt.duration_s, b1);
  }
  if (opt.traj == "table") {
    if (opt.table.empty()) {
      throw std::runtime_error("--traj table requires --table <csv>");
    }
    return DesiredTrajectory::from_table_csv(opt.table);
  }
  throw std::runtime_error("unknown trajectory '" + opt.traj +
                           "' (hover|circle|line|table)");
}

}  // namespace

int cmd_plan(const PlanOptions& opt) {
  ConfigurationPlan result;
  try {
    PlannerRequest req;
    req.payload_weight_n = opt.payload_weight_n;
    req.quad_weight_n = opt.quad_weight_n;
    req.thrust_n = opt.thrust_n;
    req.prop_radius_m = opt.quad_radius_m;
    req.dims_m = parse_triplet(opt.dims_m, 'x', "--dims-m");
    req.safety_factor = opt.safety_factor;
    req.hover_height_m = opt.hover_height_m;
    const auto policy = radius_policy_from_string(opt.radius_policy);
    if (!policy.has_value()) {
      throw std::runtime_error(
          "--radius-policy must be 'circumradius' or 'side'");
    }
    req.radius_policy = *policy;
    result = plan(req);
  } catch (const std::exception& e) {
    std::cerr << "plan: " << e.what() << "\n";
    return kBadInput;
  }

  const std::string json = plan_to_json(result);
  if (opt.out.empty()) {
    std::cout << json << "\n";
  } else {
    std::ofstream out(opt.out);
    if (!out) {
      std::cerr << "plan: cannot write " << opt.out << "\n";
      return kBadInput;
    }
    out << json << "\n";
  }
  switch (result.scenario) {
    case Feasibility::Feasible:
      return kOk;
    case Feasibility::FeasibleWithCaution:
      return kCaution;
    case Feasibility::Infeasible:
      return kInfeasible;
  }
  return kInfeasible;
}

int cmd_hover(const HoverOptions& opt) {
  TimeSeries series;
  SimScenario scenario;
  try {
    scenario = load_scenario(opt.scenario);
    if (opt.t_final_s.has_value()) {
      scenario.integrator.t_final = *opt.t_final_s;
    }
    if (opt.dt_s.has_value()) {
      scenario.integrator.dt = *opt.dt_s;
    }
    const SwarmState initial = scenario.initial_state();
    series = simulate(initial, scenario.policy(), scenario.system(),
                      scenario.integrator);
  } catch (const Diverged& e) {
    std::cerr << "hover: " << e.what() << "\n";
    return kDiverged;
  } catch (const std::exception& e) {
    std::cerr << "hover: " << e.what() << "\n";
    return kBadInput;
  }

  const Vec3 x0_start = series.states.front().x0;
  double max_dz = 0.0;
  double max_dx = 0.0;
  for (const SwarmState& s : series.states) {
    max_dz = std::max(max_dz, std::abs(s.x0.z() - x0_start.z()));
    max_dx = std::max(max_dx, (s.x0 - x0_start).norm());
  }
  std::printf("samples: %zu  vehicles: %d\n", series.t.size(), series.n());
  std::printf("max |dz0| = %.3e m  max |dx0| = %.3e m over %g s\n", max_dz,
              max_dx, series.t.back());

  if (!opt.out.empty()) {
    try {
      write_series_csv(opt.out, series, scenario.system().links);
    } catch (const std::exception& e) {
      std::cerr << "hover: " << e.what() << "\n";
      return kBadInput;
    }
  }
  return kOk;
}

int cmd_track(const TrackOptions& opt) {
  QuadTimeSeries series;
  try {
    const SimScenario scenario = load_scenario(opt.scenario);
    const DesiredTrajectory reference = build_trajectory(opt);

    QuadState initial;
    const TrajectorySample start = reference.at(0.0);
    initial.x =
        start.x_d + parse_triplet(opt.offset_m, ',', "--offset-m");
    initial.R =
        exp_so3(parse_triplet(opt.attitude_axis_angle, ',', "--attitude-aa"));

    IntegratorConfig config = scenario.integrator;
    config.dt = opt.dt_s;
    config.t_final = opt.t_final_s;
    if (opt.ideal_actuation) {
      config.enforce_rotor_limits = false;
    }
    series = simulate_quadrotor(initial, reference, scenario.gains,
                                scenario.quad, config);
  } catch (const Diverged& e) {
    std::cerr << "track: " << e.what() << "\n";
    return kDiverged;
  } catch (const std::exception& e) {
    std::cerr << "track: " << e.what() << "\n";
    return kBadInput;
  }

  // Error statistics over the trailing second.
  const double t_end = series.t.back();
  double max_ex = 0.0;
  double max_psi = 0.0;
  for (std::size_t k = 0; k < series.outputs.size(); ++k) {
    if (series.t[k] + 1.0 < t_end) {
      continue;
    }
    max_ex = std::max(max_ex, series.outputs[k].e_x.norm());
    max_psi = std::max(max_psi, series.outputs[k].Psi);
  }
  std::printf("steps: %zu  saturated: %d\n", series.outputs.size(),
              series.saturated_steps);
  std::printf("final second: max |e_x| = %.3e m  max Psi = %.3e\n", max_ex,
              max_psi);

  if (!opt.out.empty()) {
    try {
      write_track_csv(opt.out, series);
    } catch (const std::exception& e) {
      std::cerr << "track: " << e.what() << "\n";
      return kBadInput;
    }
  }
  return kOk;
}

int cmd_check(const CheckOptions& opt) {
  TimeSeries series;
  try {
    series = read_series_csv(opt.csv);
  } catch (const std::exception& e) {
    std::cerr << "check: " << e.what() << "\n";
    return kBadInput;
  }
  const CheckReport report = check_series(series, opt.tol);
  if (!report.ok) {
    std::printf("violation at row %zu: %s\n", report.row,
                report.message.c_str());
    return kInfeasible;
  }
  std::printf("OK: %zu samples, %d vehicles, tol %g\n", series.t.size(),
              series.n(), opt.tol);
  return kOk;
}

int run(int argc, char** argv) {
  CLI::App app{"Slung-payload multirotor sizing and simulation"};
  app.require_subcommand(1);

  PlanOptions plan_opt;
  CLI::App* plan_cmd =
      app.add_subcommand("plan", "Size a fleet and lay out attachments");
  plan_cmd->add_option("--payload-weight-n", plan_opt.payload_weight_n,
                       "Payload weight [N]")
      ->required();
  plan_cmd->add_option("--quad-weight-n", plan_opt.quad_weight_n,
                       "Per-vehicle weight [N]")
      ->required();
  plan_cmd->add_option("--thrust-n", plan_opt.thrust_n,
                       "Per-vehicle thrust capability [N]")
      ->required();
  plan_cmd->add_option("--quad-radius-m", plan_opt.quad_radius_m,
                       "Propeller radius [m]")
      ->required();
  plan_cmd->add_option("--dims-m", plan_opt.dims_m,
                       "Payload box LxWxH [m], e.g. 1x0.8x0.2");
  plan_cmd->add_option("--safety-factor", plan_opt.safety_factor,
                       "Fleet-size safety factor");
  plan_cmd->add_option("--hover-height-m", plan_opt.hover_height_m,
                       "Hover height above the top face (= link length) [m]");
  plan_cmd->add_option("--radius-policy", plan_opt.radius_policy,
                       "Attachment circle policy: circumradius|side");
  plan_cmd->add_option("--out", plan_opt.out, "Write the JSON plan here");

  HoverOptions hover_opt;
  CLI::App* hover_cmd =
      app.add_subcommand("hover", "Simulate a slung-payload hover");
  hover_cmd->add_option("--scenario", hover_opt.scenario,
                        "Scenario JSON (stock scenario when omitted)");
  hover_cmd->add_option("--out", hover_opt.out, "Write the series CSV here");
  double hover_t_final = -1.0;
  double hover_dt = -1.0;
  hover_cmd->add_option("--t-final-s", hover_t_final, "Override duration [s]");
  hover_cmd->add_option("--dt-s", hover_dt, "Override step size [s]");

  TrackOptions track_opt;
  CLI::App* track_cmd = app.add_subcommand(
      "track", "Run one vehicle against a reference trajectory");
  track_cmd->add_option("--scenario", track_opt.scenario,
                        "Scenario JSON for vehicle parameters and gains");
  track_cmd->add_option("--traj", track_opt.traj,
                        "Reference: hover|circle|line|table");
  track_cmd->add_option("--table", track_opt.table,
                        "Trajectory table CSV for --traj table");
  track_cmd->add_option("--point", track_opt.point, "Hover point x,y,z [m]");
  track_cmd->add_option("--center", track_opt.center,
                        "Circle center x,y,z [m]");
  track_cmd->add_option("--radius-m", track_opt.radius_m, "Circle radius [m]");
  track_cmd->add_option("--period-s", track_opt.period_s, "Circle period [s]");
  track_cmd->add_option("--from", track_opt.from, "Line start x,y,z [m]");
  track_cmd->add_option("--to", track_opt.to, "Line end x,y,z [m]");
  track_cmd->add_option("--duration-s", track_opt.duration_s,
                        "Line duration [s]");
  track_cmd->add_option("--b1", track_opt.b1, "Desired heading axis x,y,z");
  track_cmd->add_option("--offset-m", track_opt.offset_m,
                        "Initial position offset x,y,z [m]");
  track_cmd->add_option("--attitude-aa", track_opt.attitude_axis_angle,
                        "Initial attitude error as axis-angle x,y,z [rad]");
  track_cmd->add_option("--t-final-s", track_opt.t_final_s, "Duration [s]");
  track_cmd->add_option("--dt-s", track_opt.dt_s, "Step size [s]");
  track_cmd->add_flag("--ideal-actuation", track_opt.ideal_actuation,
                      "Apply the commanded wrench without rotor clipping "
                      "(saturation is still reported)");
  track_cmd->add_option("--out", track_opt.out, "Write the track CSV here");

  CheckOptions check_opt;
  CLI::App* check_cmd =
      app.add_subcommand("check", "Verify per-row invariants of a series CSV");
  check_cmd->add_option("csv", check_opt.csv, "Series CSV to check")
      ->required();
  check_cmd->add_option("--tol", check_opt.tol, "Invariant tolerance");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kBadInput;
  }

  if (plan_cmd->parsed()) {
    return cmd_plan(plan_opt);
  }
  if (hover_cmd->parsed()) {
    if (hover_t_final >= 0.0) {
      hover_opt.t_final_s = hover_t_final;
    }
    if (hover_dt > 0.0) {
      hover_opt.dt_s = hover_dt;
    }
    return cmd_hover(hover_opt);
  }
  if (track_cmd->parsed()) {
    return cmd_track(track_opt);
  }
  if (check_cmd->parsed()) {
    return cmd_check(check_opt);
  }
  return kBadInput;
}

}  // namespace swarmsling::cli

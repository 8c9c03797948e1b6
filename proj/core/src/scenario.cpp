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

#include "swarmsling/scenario.hpp"

#include <fstream>
#include <stdexcept>

#include <json.hpp>

#include "swarmsling/errors.hpp"

namespace swarmsling {

namespace {

using nlohmann::json;

[[noreturn]] void bad(const std::string& what) {
  throw std::runtime_error("scenario: " + what);
}

void expect_keys(const json& j, const std::string& section,
                 std::initializer_list<const char*> allowed) {
  for (const auto& [key, value] : j.items()) {
    (void)value;
    bool known = false;
    for (const char* name : allowed) {
      if (key == name) {
        known = true;
        break;
      }
    }
    if (!known) {
      bad("unknown key '" + key + "' in " + section);
    }
  }
}

double number(const json& j, const std::string& where) {
  if (!j.is_number()) {
    bad(where + " must be a number");
  }
  return j.get<double>();
}

Vec3 vec3(const json& j, const std::string& where) {
  if (!j.is_array() || j.size() != 3) {
    bad(where + " must be an array of 3 numbers");
  }
  return Vec3{number(j[0], where), number(j[1], where), number(j[2], where)};
}

}  // namespace

SimScenario SimScenario::defaults() {
  SimScenario s;
  s.payload.m0 = 1.5;
  s.payload.dims = Vec3{1.0, 0.8, 0.2};
  s.payload.J0 = PayloadParams::box_inertia(s.payload.m0, s.payload.dims);

  s.quad.m = 0.755;
  s.quad.J = Vec3{0.0820, 0.0845, 0.1377}.asDiagonal();
  s.quad.d = 0.315;
  s.quad.c_tau_f = 0.016;
  s.quad.g = 9.81;
  s.quad.T_max = 30.0;
  s.quad.r_prop = 0.12;

  s.gains = Gains::defaults_for(s.quad);

  s.integrator.dt = 1e-3;
  s.integrator.t_final = 10.0;
  s.integrator.retraction_every = 1;
  return s;
}

SimScenario SimScenario::from_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    bad(path + ": cannot open for reading");
  }
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    bad(path + ": " + e.what());
  }
  if (!j.is_object()) {
    bad(path + ": top level must be an object");
  }
  expect_keys(j, "scenario",
              {"payload", "quadrotor", "fleet", "gains", "initial", "inputs",
               "sim"});

  SimScenario s = defaults();
  bool inertia_given = false;

  if (j.contains("payload")) {
    const json& p = j["payload"];
    expect_keys(p, "payload", {"mass_kg", "dims_m", "inertia_diag_kgm2"});
    if (p.contains("mass_kg")) {
      s.payload.m0 = number(p["mass_kg"], "payload.mass_kg");
    }
    if (p.contains("dims_m")) {
      s.payload.dims = vec3(p["dims_m"], "payload.dims_m");
    }
    if (p.contains("inertia_diag_kgm2")) {
      s.payload.J0 =
          vec3(p["inertia_diag_kgm2"], "payload.inertia_diag_kgm2")
              .asDiagonal();
      inertia_given = true;
    }
  }
  if (!inertia_given) {
    s.payload.J0 = PayloadParams::box_inertia(s.payload.m0, s.payload.dims);
  }

  bool gains_given = j.contains("gains");
  if (j.contains("quadrotor")) {
    const json& q = j["quadrotor"];
    expect_keys(q, "quadrotor",
                {"mass_kg", "inertia_diag_kgm2", "arm_length_m",
                 "torque_coeff_m", "gravity_mps2", "max_thrust_n",
                 "prop_radius_m"});
    if (q.contains("mass_kg")) {
      s.quad.m = number(q["mass_kg"], "quadrotor.mass_kg");
    }
    if (q.contains("inertia_diag_kgm2")) {
      s.quad.J = vec3(q["inertia_diag_kgm2"], "quadrotor.inertia_diag_kgm2")
                     .asDiagonal();
    }
    if (q.contains("arm_length_m")) {
      s.quad.d = number(q["arm_length_m"], "quadrotor.arm_length_m");
    }
    if (q.contains("torque_coeff_m")) {
      s.quad.c_tau_f = number(q["torque_coeff_m"], "quadrotor.torque_coeff_m");
    }
    if (q.contains("gravity_mps2")) {
      s.quad.g = number(q["gravity_mps2"], "quadrotor.gravity_mps2");
    }
    if (q.contains("max_thrust_n")) {
      s.quad.T_max = number(q["max_thrust_n"], "quadrotor.max_thrust_n");
    }
    if (q.contains("prop_radius_m")) {
      s.quad.r_prop = number(q["prop_radius_m"], "quadrotor.prop_radius_m");
    }
    if (!gains_given) {
      s.gains = Gains::defaults_for(s.quad);
    }
  }

  if (j.contains("fleet")) {
    const json& f = j["fleet"];
    expect_keys(f, "fleet", {"count", "link_length_m", "radius_policy"});
    if (f.contains("count")) {
      if (!f["count"].is_number_integer()) {
        bad("fleet.count must be an integer");
      }
      s.fleet_count = f["count"].get<int>();
    }
    if (f.contains("link_length_m")) {
      s.link_length_m = number(f["link_length_m"], "fleet.link_length_m");
    }
    if (f.contains("radius_policy")) {
      if (!f["radius_policy"].is_string()) {
        bad("fleet.radius_policy must be a string");
      }
      const auto policy =
          radius_policy_from_string(f["radius_policy"].get<std::string>());
      if (!policy.has_value()) {
        bad("fleet.radius_policy must be 'circumradius' or 'side'");
      }
      s.radius_policy = *policy;
    }
  }

  if (gains_given) {
    const json& g = j["gains"];
    expect_keys(g, "gains", {"k_x", "k_v", "k_R", "k_Omega"});
    if (g.contains("k_x")) s.gains.k_x = number(g["k_x"], "gains.k_x");
    if (g.contains("k_v")) s.gains.k_v = number(g["k_v"], "gains.k_v");
    if (g.contains("k_R")) s.gains.k_R = number(g["k_R"], "gains.k_R");
    if (g.contains("k_Omega")) {
      s.gains.k_Omega = number(g["k_Omega"], "gains.k_Omega");
    }
  }

  if (j.contains("initial")) {
    const json& i = j["initial"];
    expect_keys(i, "initial",
                {"payload_offset_m", "payload_attitude_axis_angle",
                 "link_tilt_rad"});
    if (i.contains("payload_offset_m")) {
      s.payload_offset_m =
          vec3(i["payload_offset_m"], "initial.payload_offset_m");
    }
    if (i.contains("payload_attitude_axis_angle")) {
      s.payload_attitude_axis_angle =
          vec3(i["payload_attitude_axis_angle"],
               "initial.payload_attitude_axis_angle");
    }
    if (i.contains("link_tilt_rad")) {
      s.link_tilt_rad = number(i["link_tilt_rad"], "initial.link_tilt_rad");
    }
  }

  if (j.contains("inputs")) {
    const json& u = j["inputs"];
    expect_keys(u, "inputs", {"policy", "thrust_scale"});
    if (u.contains("policy")) {
      if (!u["policy"].is_string()) {
        bad("inputs.policy must be a string");
      }
      s.input_policy = u["policy"].get<std::string>();
      if (s.input_policy != "hover" && s.input_policy != "attitude_hold") {
        bad("inputs.policy must be 'hover' or 'attitude_hold'");
      }
    }
    if (u.contains("thrust_scale")) {
      if (!u["thrust_scale"].is_array()) {
        bad("inputs.thrust_scale must be an array");
      }
      s.thrust_scale.clear();
      for (const json& v : u["thrust_scale"]) {
        s.thrust_scale.push_back(number(v, "inputs.thrust_scale"));
      }
    }
  }

  if (j.contains("sim")) {
    const json& m = j["sim"];
    expect_keys(m, "sim",
                {"dt_s", "t_final_s", "retraction_every",
                 "enforce_rotor_limits"});
    if (m.contains("dt_s")) {
      s.integrator.dt = number(m["dt_s"], "sim.dt_s");
    }
    if (m.contains("t_final_s")) {
      s.integrator.t_final = number(m["t_final_s"], "sim.t_final_s");
    }
    if (m.contains("retraction_every")) {
      if (!m["retraction_every"].is_number_integer()) {
        bad("sim.retraction_every must be an integer");
      }
      s.integrator.retraction_every = m["retraction_every"].get<int>();
    }
    if (m.contains("enforce_rotor_limits")) {
      if (!m["enforce_rotor_limits"].is_boolean()) {
        bad("sim.enforce_rotor_limits must be a boolean");
      }
      s.integrator.enforce_rotor_limits =
          m["enforce_rotor_limits"].get<bool>();
    }
  }
  return s;
}

SystemParams SimScenario::system() const {
  if (fleet_count < 1) {
    throw BadCount("scenario: fleet count must be at least 1");
  }
  const AttachmentLayout layout =
      attachment_points(fleet_count, payload.dims, radius_policy);
  std::vector<LinkSpec> links(fleet_count);
  for (int i = 0; i < fleet_count; ++i) {
    links[i] = LinkSpec{layout.rho[i], link_length_m};
  }
  SystemParams params = SystemParams::homogeneous(payload, quad, links);
  params.validate();
  return params;
}

SwarmState SimScenario::initial_state() const {
  SwarmState s = hover_state(system(), payload_offset_m);
  s.R0 = exp_so3(payload_attitude_axis_angle);
  if (link_tilt_rad != 0.0) {
    const Mat3 tilt = exp_so3(link_tilt_rad * Vec3::UnitY());
    for (LinkState& link : s.links) {
      link.q = tilt * kE3;
    }
  }
  return s;
}

SwarmInput SimScenario::inputs() const {
  const SystemParams params = system();
  SwarmInput input = hover_inputs(params);
  if (!thrust_scale.empty()) {
    if (static_cast<int>(thrust_scale.size()) != params.n()) {
      throw BadCount("scenario: thrust_scale size must match fleet count");
    }
    for (int i = 0; i < params.n(); ++i) {
      input.thrust[i] *= thrust_scale[i];
    }
  }
  return input;
}

InputPolicy SimScenario::policy() const {
  if (input_policy == "attitude_hold") {
    return attitude_hold_policy(system(), gains, inputs().thrust);
  }
  return constant_policy(inputs());
}

}  // namespace swarmsling

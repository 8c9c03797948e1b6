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

#include "swarmsling/config_planner.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include <json.hpp>

#include "swarmsling/errors.hpp"

namespace swarmsling {

namespace {

constexpr double kPi = std::numbers::pi;

double footprint_min(const Vec3& dims) { return std::min(dims.x(), dims.y()); }

double circle_radius(int n, const Vec3& dims, RadiusPolicy policy) {
  if (n < 2) {
    return 0.0;
  }
  switch (policy) {
    case RadiusPolicy::Circumradius:
      return footprint_min(dims) / 2.0;
    case RadiusPolicy::Side:
      return footprint_min(dims) / (2.0 * std::sin(kPi / n));
  }
  throw std::invalid_argument("circle_radius: unknown radius policy");
}

bool spacing_ok_for(int n, const PlannerRequest& req) {
  return spacing_ok(n, req.prop_radius_m,
                    circle_radius(n, req.dims_m, req.radius_policy));
}

// Largest fleet whose hover spacing still fits, or nullopt when every fleet
// size fits (possible under RadiusPolicy::Side, where spacing does not
// depend on n).
std::optional<int> max_spacing_fleet(const PlannerRequest& req) {
  if (!spacing_ok_for(2, req)) {
    return 1;
  }
  if (req.radius_policy == RadiusPolicy::Side) {
    return std::nullopt;  // spacing is n-independent and passed at n = 2
  }
  // Circumradius policy: the polygon side shrinks monotonically with n, so
  // invert 2 r sin(pi/n) >= 3 r_prop and fix up any floating-point slack.
  const double ratio =
      3.0 * req.prop_radius_m /
      (2.0 * circle_radius(2, req.dims_m, req.radius_policy));
  int n = ratio >= 1.0 ? 2 : static_cast<int>(kPi / std::asin(ratio));
  while (n > 2 && !spacing_ok_for(n, req)) {
    --n;
  }
  while (spacing_ok_for(n + 1, req)) {
    ++n;
  }
  return n;
}

}  // namespace

std::string to_string(Feasibility f) {
  switch (f) {
    case Feasibility::Feasible:
      return "Feasible";
    case Feasibility::FeasibleWithCaution:
      return "FeasibleWithCaution";
    case Feasibility::Infeasible:
      return "Infeasible";
  }
  return "Infeasible";
}

std::string to_string(RadiusPolicy p) {
  return p == RadiusPolicy::Circumradius ? "circumradius" : "side";
}

std::optional<RadiusPolicy> radius_policy_from_string(std::string_view name) {
  if (name == "circumradius") {
    return RadiusPolicy::Circumradius;
  }
  if (name == "side") {
    return RadiusPolicy::Side;
  }
  return std::nullopt;
}

PlannerRequest PlannerRequest::from_params(const PayloadParams& payload,
                                           const QuadrotorParams& quad,
                                           double safety_factor,
                                           double hover_height_m,
                                           RadiusPolicy policy) {
  PlannerRequest req;
  req.payload_weight_n = payload.m0 * quad.g;
  req.quad_weight_n = quad.m * quad.g;
  req.thrust_n = quad.T_max;
  req.prop_radius_m = quad.r_prop;
  req.dims_m = payload.dims;
  req.safety_factor = safety_factor;
  req.hover_height_m = hover_height_m;
  req.radius_policy = policy;
  return req;
}

void PlannerRequest::validate() const {
  if (!(payload_weight_n > 0.0) || !(quad_weight_n > 0.0) ||
      !(thrust_n > 0.0)) {
    throw std::invalid_argument(
        "PlannerRequest: weights and thrust must be positive");
  }
  if (!(prop_radius_m > 0.0)) {
    throw std::invalid_argument(
        "PlannerRequest: propeller radius must be positive");
  }
  if (!(dims_m.minCoeff() > 0.0)) {
    throw std::invalid_argument("PlannerRequest: dims must be positive");
  }
  if (!(safety_factor >= 1.0)) {
    throw std::invalid_argument(
        "PlannerRequest: safety factor must be at least 1");
  }
  if (!(hover_height_m > 0.0)) {
    throw std::invalid_argument(
        "PlannerRequest: hover height must be positive");
  }
}

std::vector<LinkSpec> ConfigurationPlan::links() const {
  std::vector<LinkSpec> out(attachments.size());
  for (std::size_t i = 0; i < attachments.size(); ++i) {
    out[i] = LinkSpec{attachments[i], link_length_m};
  }
  return out;
}

double half_vertex_angle(int n) {
  if (n < 1) {
    throw BadCount("half_vertex_angle: need at least one vehicle");
  }
  return (n - 2) * kPi / (2.0 * n);
}

double min_quadrotors(double payload_weight_n, double quad_weight_n,
                      double thrust_n) {
  if (!(payload_weight_n > 0.0) || !(quad_weight_n > 0.0) ||
      !(thrust_n > 0.0)) {
    throw std::invalid_argument(
        "min_quadrotors: weights and thrust must be positive");
  }
  if (thrust_n <= quad_weight_n) {
    throw std::invalid_argument(
        "min_quadrotors: vehicle cannot lift its own weight");
  }
  return payload_weight_n / (thrust_n - quad_weight_n);
}

double polygon_side(int n, double r_circ) {
  if (n < 2) {
    throw BadCount("polygon_side: need at least two vertices");
  }
  return 2.0 * r_circ * std::sin(kPi / n);
}

bool spacing_ok(int n, double prop_radius_m, double r_circ_m) {
  if (n < 1) {
    throw BadCount("spacing_ok: need at least one vehicle");
  }
  if (n == 1) {
    return true;
  }
  return polygon_side(n, r_circ_m) >= 3.0 * prop_radius_m;
}

AttachmentLayout attachment_points(int n, const Vec3& dims,
                                   RadiusPolicy policy) {
  if (n < 1) {
    throw BadCount("attachment_points: need at least one vehicle");
  }
  AttachmentLayout layout;
  const double z_top = -dims.z() / 2.0;
  if (n == 1) {
    layout.rho = {Vec3{0.0, 0.0, z_top}};
    return layout;
  }
  layout.r_circ = circle_radius(n, dims, policy);
  layout.rho.resize(n);
  for (int i = 1; i <= n; ++i) {
    const double theta = 2.0 * kPi * i / n;
    layout.rho[i - 1] = Vec3{layout.r_circ * std::cos(theta),
                             layout.r_circ * std::sin(theta), z_top};
  }
  return layout;
}

Recommendation recommend(const PlannerRequest& req, std::optional<int> n_fs) {
  Recommendation rec;
  const std::optional<int> n_max = max_spacing_fleet(req);

  // Propeller size that would make the (safety-factored) fleet fit; with no
  // sized fleet, the loosest requirement of any multi-vehicle layout.
  const int radius_fleet = n_fs.value_or(2);
  rec.max_radius_m =
      polygon_side(std::max(radius_fleet, 2),
                   circle_radius(std::max(radius_fleet, 2), req.dims_m,
                                 req.radius_policy)) /
      3.0;

  if (!n_max.has_value()) {
    // Spacing never binds; any fleet large enough to share the load works.
    rec.min_thrust_n = req.quad_weight_n * req.safety_factor;
  } else if (*n_max == 1) {
    // Only a single vehicle fits, so it must carry the entire system.
    rec.min_thrust_n = req.payload_weight_n + req.quad_weight_n;
  } else {
    rec.min_thrust_n =
        (req.payload_weight_n / *n_max + req.quad_weight_n) *
        req.safety_factor;
  }
  return rec;
}

ConfigurationPlan plan(const PlannerRequest& req) {
  req.validate();

  ConfigurationPlan out;
  out.link_length_m = req.hover_height_m;

  std::optional<int> n_fs;
  if (req.thrust_n > req.quad_weight_n) {
    const double n_raw =
        min_quadrotors(req.payload_weight_n, req.quad_weight_n, req.thrust_n);
    out.n_min = static_cast<int>(std::ceil(n_raw));
    out.n_fs = static_cast<int>(
        std::floor(out.n_min * req.safety_factor + 0.5));
    n_fs = out.n_fs;

    if (spacing_ok_for(out.n_fs, req)) {
      out.scenario = Feasibility::Feasible;
      out.n = out.n_fs;
    } else if (spacing_ok_for(out.n_min, req)) {
      out.scenario = Feasibility::FeasibleWithCaution;
      out.n = out.n_min;
    } else {
      out.scenario = Feasibility::Infeasible;
    }
  } else {
    out.scenario = Feasibility::Infeasible;
  }

  if (out.n >= 1) {
    const AttachmentLayout layout =
        attachment_points(out.n, req.dims_m, req.radius_policy);
    out.attachments = layout.rho;
    out.r_circ_m = layout.r_circ;
    out.alpha_rad = out.n >= 2 ? half_vertex_angle(out.n) : 0.0;
  }
  if (out.scenario != Feasibility::Feasible) {
    out.recommendation = recommend(req, n_fs);
  }
  return out;
}

std::string plan_to_json(const ConfigurationPlan& plan) {
  nlohmann::json j;
  j["n"] = plan.n;
  j["alpha_rad"] = plan.alpha_rad;
  j["r_circ_m"] = plan.r_circ_m;
  j["scenario"] = to_string(plan.scenario);
  nlohmann::json attachments = nlohmann::json::array();
  for (const Vec3& rho : plan.attachments) {
    attachments.push_back({rho.x(), rho.y(), rho.z()});
  }
  j["attachments"] = std::move(attachments);
  j["link_length_m"] = plan.link_length_m;
  if (plan.recommendation.has_value()) {
    j["recommendation"] = {
        {"max_radius_m", plan.recommendation->max_radius_m},
        {"min_thrust_N", plan.recommendation->min_thrust_n}};
  } else {
    j["recommendation"] = nullptr;
  }
  return j.dump(2);
}

}  // namespace swarmsling

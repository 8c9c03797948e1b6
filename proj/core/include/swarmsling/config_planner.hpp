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

// Static sizing and layout of a slung-load fleet: how many vehicles are
// needed, where their links attach on the payload's top face, and what to fix
// (propeller size or thrust) when no workable fleet exists.

#ifndef SWARMSLING_CONFIG_PLANNER_HPP
#define SWARMSLING_CONFIG_PLANNER_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "swarmsling/geometry.hpp"
#include "swarmsling/swarm_dynamics.hpp"

namespace swarmsling {

enum class Feasibility { Feasible, FeasibleWithCaution, Infeasible };

std::string to_string(Feasibility f);

// How the attachment circle radius is chosen from the payload footprint
// (L x W, L along x):
//  - Circumradius: r = min(L, W) / 2, keeping every attachment inside the
//    footprint's inscribed circle. Vehicle spacing then shrinks as the fleet
//    grows.
//  - Side: r = min(L, W) / (2 sin(pi/n)), keeping the spacing between
//    adjacent vehicles equal to min(L, W) regardless of fleet size. For
//    n >= 4 the circle can extend beyond the footprint.
enum class RadiusPolicy { Circumradius, Side };

std::string to_string(RadiusPolicy p);
std::optional<RadiusPolicy> radius_policy_from_string(std::string_view name);

// Sizing problem statement. Weights are in newtons: the planner works with
// forces; callers converting from masses multiply by their g.
struct PlannerRequest {
  double payload_weight_n = 0.0;  // W_p
  double quad_weight_n = 0.0;     // W_q, per vehicle
  double thrust_n = 0.0;          // T, per-vehicle thrust capability
  double prop_radius_m = 0.0;     // propeller radius used for spacing
  Vec3 dims_m = Vec3::Zero();     // payload box (L, W, H)
  double safety_factor = 1.2;     // F_S applied to the minimal fleet
  double hover_height_m = 1.0;    // vehicle height above the top face;
                                  // equals the link length
  RadiusPolicy radius_policy = RadiusPolicy::Circumradius;

  // Converts masses to weights with quad.g; uses quad.T_max and quad.r_prop.
  static PlannerRequest from_params(const PayloadParams& payload,
                                    const QuadrotorParams& quad,
                                    double safety_factor = 1.2,
                                    double hover_height_m = 1.0,
                                    RadiusPolicy policy =
                                        RadiusPolicy::Circumradius);

  // Throws std::invalid_argument on nonpositive weights, thrust, radius,
  // dims or hover height, or a safety factor below 1.
  void validate() const;
};

// What to change when the requested fleet cannot be realized: the largest
// propeller radius that would make the sized fleet fit, and the per-vehicle
// thrust that would let a fleet that does fit carry the load.
struct Recommendation {
  double max_radius_m = 0.0;
  double min_thrust_n = 0.0;
};

// Attachment directions on the payload top face (z = -H/2, z-down) and the
// radius of the circle they sit on.
struct AttachmentLayout {
  std::vector<Vec3> rho;
  double r_circ = 0.0;
};

// Planner verdict. `n` is the fleet size to fly (0 when infeasible);
// `n_min`/`n_fs` are the thrust-limited minimum and the safety-factored
// target (0 when the thrust deficit makes them undefined). A recommendation
// is attached whenever the verdict is not Feasible.
struct ConfigurationPlan {
  int n = 0;
  int n_min = 0;
  int n_fs = 0;
  double alpha_rad = 0.0;
  double r_circ_m = 0.0;
  double link_length_m = 0.0;
  Feasibility scenario = Feasibility::Infeasible;
  std::vector<Vec3> attachments;
  std::optional<Recommendation> recommendation;

  // Attachments paired with the common link length.
  std::vector<LinkSpec> links() const;
};

// Half vertex angle (n - 2) pi / (2 n) of the regular attachment polygon.
// Meaningful for n >= 3; throws BadCount for n < 1.
double half_vertex_angle(int n);

// Raw fleet-size ratio W_p / (T - W_q). Throws std::invalid_argument when
// the inputs are nonpositive or T <= W_q (one vehicle cannot even lift
// itself plus any share of the payload).
double min_quadrotors(double payload_weight_n, double quad_weight_n,
                      double thrust_n);

// Distance between adjacent vertices of a regular n-gon with circumradius
// r_circ (n >= 2).
double polygon_side(int n, double r_circ);

// True when vehicles hovering over the attachment polygon keep at least
// three propeller radii between adjacent hulls. A single vehicle always
// passes.
bool spacing_ok(int n, double prop_radius_m, double r_circ_m);

// Attachment points for an n-vehicle fleet on a payload with the given box
// dimensions: vertices of a regular n-gon on the top face at angles
// 2 pi i / n (i = 1..n), or the face center for n = 1. Throws BadCount for
// n < 1.
AttachmentLayout attachment_points(int n, const Vec3& dims,
                                   RadiusPolicy policy);

// Remedy for an unrealizable request; `n_fs` is the safety-factored fleet
// size when it exists. With no workable multi-vehicle spacing the thrust
// recommendation falls back to a single vehicle carrying the whole load
// (W_p + W_q, no safety factor).
Recommendation recommend(const PlannerRequest& req, std::optional<int> n_fs);

// Full sizing pass: fleet size from the thrust budget, safety factor,
// spacing check, attachment layout, and a recommendation when the outcome is
// degraded or infeasible.
ConfigurationPlan plan(const PlannerRequest& req);

// Serializes a plan to a JSON object with keys n, alpha_rad, r_circ_m,
// scenario, attachments, link_length_m and recommendation (null when
// absent).
std::string plan_to_json(const ConfigurationPlan& plan);

}  // namespace swarmsling

#endif  // SWARMSLING_CONFIG_PLANNER_HPP

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

#include <doctest.h>

#include <cmath>
#include <optional>
#include <stdexcept>

#include <json.hpp>

#include "swarmsling/config_planner.hpp"
#include "swarmsling/errors.hpp"

namespace {

using swarmsling::Feasibility;
using swarmsling::PlannerRequest;
using swarmsling::RadiusPolicy;
using swarmsling::Vec3;

constexpr double kPayloadWeight = 1.5 * 9.81;   // 14.715 N
constexpr double kQuadWeight = 0.755 * 9.81;    // 7.40655 N

PlannerRequest reference_request(double thrust_n, double prop_radius_m) {
  PlannerRequest req;
  req.payload_weight_n = kPayloadWeight;
  req.quad_weight_n = kQuadWeight;
  req.thrust_n = thrust_n;
  req.prop_radius_m = prop_radius_m;
  req.dims_m = Vec3{1.0, 0.8, 0.2};
  return req;
}

double rel_err(double got, double expected) {
  return std::abs(got - expected) / std::abs(expected);
}

}  // namespace

TEST_SUITE("config_planner") {

TEST_CASE("half vertex angle of the attachment polygon") {
  CHECK(swarmsling::half_vertex_angle(3) == doctest::Approx(M_PI / 6.0));
  CHECK(swarmsling::half_vertex_angle(4) == doctest::Approx(M_PI / 4.0));
  CHECK(swarmsling::half_vertex_angle(6) == doctest::Approx(M_PI / 3.0));
  CHECK(swarmsling::half_vertex_angle(2) == doctest::Approx(0.0));
  CHECK_THROWS_AS(swarmsling::half_vertex_angle(0), swarmsling::BadCount);
  CHECK_THROWS_AS(swarmsling::half_vertex_angle(-3), swarmsling::BadCount);
}

TEST_CASE("raw fleet-size ratio") {
  CHECK(swarmsling::min_quadrotors(kPayloadWeight, kQuadWeight, 10.0) ==
        doctest::Approx(kPayloadWeight / (10.0 - kQuadWeight)).epsilon(1e-12));
  CHECK(swarmsling::min_quadrotors(kPayloadWeight, kQuadWeight, 25.0) ==
        doctest::Approx(kPayloadWeight / (25.0 - kQuadWeight)).epsilon(1e-12));
  // A vehicle that cannot lift its own weight has no finite fleet size.
  CHECK_THROWS_AS(swarmsling::min_quadrotors(kPayloadWeight, kQuadWeight,
                                             kQuadWeight),
                  std::invalid_argument);
  CHECK_THROWS_AS(swarmsling::min_quadrotors(kPayloadWeight, kQuadWeight, 5.0),
                  std::invalid_argument);
  CHECK_THROWS_AS(swarmsling::min_quadrotors(-1.0, kQuadWeight, 10.0),
                  std::invalid_argument);
  CHECK_THROWS_AS(swarmsling::min_quadrotors(kPayloadWeight, 0.0, 10.0),
                  std::invalid_argument);
}

TEST_CASE("polygon side lengths") {
  CHECK(swarmsling::polygon_side(2, 0.4) == doctest::Approx(0.8));
  CHECK(swarmsling::polygon_side(4, 1.0) == doctest::Approx(std::sqrt(2.0)));
  CHECK(swarmsling::polygon_side(6, 1.0) == doctest::Approx(1.0));
}

TEST_CASE("spacing check against three propeller radii") {
  // Single vehicle: nothing to collide with.
  CHECK(swarmsling::spacing_ok(1, 10.0, 0.4));
  // Hexagon of circumradius 0.4 has side 0.4 >= 3 * 0.12.
  CHECK(swarmsling::spacing_ok(6, 0.12, 0.4));
  // Heptagon side 0.3471 < 3 * 0.12.
  CHECK_FALSE(swarmsling::spacing_ok(7, 0.12, 0.4));
  CHECK(swarmsling::spacing_ok(7, 0.10, 0.4));
}

TEST_CASE("attachment points form a regular polygon on the top face") {
  const Vec3 dims{1.0, 0.8, 0.2};
  SUBCASE("single vehicle sits at the face center") {
    const auto layout =
        swarmsling::attachment_points(1, dims, RadiusPolicy::Circumradius);
    REQUIRE(layout.rho.size() == 1);
    CHECK((layout.rho[0] - Vec3{0.0, 0.0, -0.1}).norm() <= 1e-15);
  }
  SUBCASE("pair straddles the x axis") {
    const auto layout =
        swarmsling::attachment_points(2, dims, RadiusPolicy::Circumradius);
    REQUIRE(layout.rho.size() == 2);
    CHECK((layout.rho[0] - Vec3{-0.4, 0.0, -0.1}).norm() <= 1e-12);
    CHECK((layout.rho[1] - Vec3{0.4, 0.0, -0.1}).norm() <= 1e-12);
  }
  SUBCASE("square uses the inscribed-circle radius") {
    const auto layout =
        swarmsling::attachment_points(4, dims, RadiusPolicy::Circumradius);
    REQUIRE(layout.rho.size() == 4);
    CHECK(layout.r_circ == doctest::Approx(0.4));
    CHECK((layout.rho[0] - Vec3{0.0, 0.4, -0.1}).norm() <= 1e-12);
    CHECK((layout.rho[1] - Vec3{-0.4, 0.0, -0.1}).norm() <= 1e-12);
    CHECK((layout.rho[2] - Vec3{0.0, -0.4, -0.1}).norm() <= 1e-12);
    CHECK((layout.rho[3] - Vec3{0.4, 0.0, -0.1}).norm() <= 1e-12);
  }
  SUBCASE("side policy fixes the spacing instead of the radius") {
    const auto layout =
        swarmsling::attachment_points(4, dims, RadiusPolicy::Side);
    CHECK(layout.r_circ ==
          doctest::Approx(0.8 / (2.0 * std::sin(M_PI / 4.0))));
    CHECK(swarmsling::polygon_side(4, layout.r_circ) == doctest::Approx(0.8));
  }
  SUBCASE("centroid stays on the payload axis") {
    for (int n = 1; n <= 8; ++n) {
      Vec3 sum = Vec3::Zero();
      for (const Vec3& rho :
           swarmsling::attachment_points(n, dims, RadiusPolicy::Circumradius)
               .rho) {
        sum += rho;
        CHECK(rho.z() == doctest::Approx(-0.1));
      }
      CHECK(sum.head<2>().norm() / n <= 1e-12);
    }
  }
  SUBCASE("counts below one are rejected") {
    CHECK_THROWS_AS(
        swarmsling::attachment_points(0, dims, RadiusPolicy::Circumradius),
        swarmsling::BadCount);
  }
}

TEST_CASE("fleet sizing reproduces the reference sweep") {
  // (thrust, prop radius) -> expected fleet size and verdict for the
  // 1.5 kg, 1.0 x 0.8 x 0.2 m payload carried by 0.755 kg vehicles.
  struct Row {
    double thrust;
    double r_prop;
    int n;
    Feasibility verdict;
  };
  const Row rows[] = {
      {10.0, 0.10, 7, Feasibility::Feasible},
      {10.0, 0.12, 6, Feasibility::FeasibleWithCaution},
      {14.0, 0.18, 4, Feasibility::Feasible},
      {20.0, 0.20, 2, Feasibility::Feasible},
      {20.0, 0.50, 0, Feasibility::Infeasible},
      {25.0, 0.50, 1, Feasibility::Feasible},
      {7.5, 0.15, 0, Feasibility::Infeasible},
      {12.0, 0.15, 5, Feasibility::Feasible},
      {14.0, 0.15, 4, Feasibility::Feasible},
      {16.0, 0.15, 2, Feasibility::Feasible},
      {25.0, 0.15, 1, Feasibility::Feasible},
  };
  for (const Row& row : rows) {
    CAPTURE(row.thrust);
    CAPTURE(row.r_prop);
    const auto plan =
        swarmsling::plan(reference_request(row.thrust, row.r_prop));
    CHECK(plan.n == row.n);
    CHECK(plan.scenario == row.verdict);
    CHECK(static_cast<int>(plan.attachments.size()) == row.n);
    CHECK(plan.recommendation.has_value() ==
          (row.verdict != Feasibility::Feasible));
    if (row.n > 0) {
      CHECK(plan.link_length_m == doctest::Approx(1.0));
      // The polygon angle only exists for an actual polygon; a lone vehicle
      // reports zero.
      const double alpha =
          row.n >= 2 ? swarmsling::half_vertex_angle(row.n) : 0.0;
      CHECK(plan.alpha_rad == doctest::Approx(alpha));
    }
  }
}

TEST_CASE("remedies for degraded and infeasible requests") {
  SUBCASE("crowded hexagon gets a smaller propeller or more thrust") {
    const auto plan = swarmsling::plan(reference_request(10.0, 0.12));
    REQUIRE(plan.recommendation.has_value());
    CHECK(rel_err(plan.recommendation->max_radius_m, 0.115318) <= 0.01);
    CHECK(rel_err(plan.recommendation->min_thrust_n, 11.84) <= 0.01);
  }
  SUBCASE("oversized propellers force a single-vehicle thrust budget") {
    const auto plan = swarmsling::plan(reference_request(20.0, 0.50));
    REQUIRE(plan.recommendation.has_value());
    CHECK(rel_err(plan.recommendation->max_radius_m, 0.265781) <= 0.01);
    CHECK(rel_err(plan.recommendation->min_thrust_n, 22.122) <= 0.01);
  }
  SUBCASE("thrust-starved request gets both remedies") {
    const auto plan = swarmsling::plan(reference_request(7.5, 0.15));
    REQUIRE(plan.recommendation.has_value());
    CHECK(rel_err(plan.recommendation->max_radius_m, 0.004394) <= 0.01);
    CHECK(rel_err(plan.recommendation->min_thrust_n, 12.947) <= 0.05);
  }
  SUBCASE("thrust below the vehicle weight still yields a remedy") {
    const auto plan = swarmsling::plan(reference_request(7.0, 0.15));
    CHECK(plan.n == 0);
    CHECK(plan.n_min == 0);
    CHECK(plan.n_fs == 0);
    CHECK(plan.scenario == Feasibility::Infeasible);
    REQUIRE(plan.recommendation.has_value());
    CHECK(plan.recommendation->max_radius_m > 0.0);
    CHECK(plan.recommendation->min_thrust_n > kQuadWeight);
  }
}

TEST_CASE("fleet size never grows with thrust") {
  // Start above the thrust where the sized fleet still fits the footprint;
  // below that the verdict degrades rather than the count growing.
  int prev = 1000;
  for (double thrust = 9.6; thrust <= 30.0; thrust += 0.25) {
    const auto plan = swarmsling::plan(reference_request(thrust, 0.10));
    CHECK(plan.scenario == Feasibility::Feasible);
    CHECK(plan.n <= prev);
    CHECK(plan.n >= 1);
    prev = plan.n;
  }
}

TEST_CASE("request construction and validation") {
  swarmsling::PayloadParams payload;
  payload.m0 = 1.5;
  payload.dims = Vec3{1.0, 0.8, 0.2};
  payload.J0 = swarmsling::PayloadParams::box_inertia(payload.m0,
                                                      payload.dims);
  swarmsling::QuadrotorParams quad;
  quad.m = 0.755;
  quad.J = Vec3{0.0820, 0.0845, 0.1377}.asDiagonal();
  quad.d = 0.315;
  quad.c_tau_f = 0.016;
  quad.g = 9.81;
  quad.T_max = 30.0;
  quad.r_prop = 0.12;

  const PlannerRequest req = PlannerRequest::from_params(payload, quad);
  CHECK(req.payload_weight_n == doctest::Approx(kPayloadWeight));
  CHECK(req.quad_weight_n == doctest::Approx(kQuadWeight));
  CHECK(req.thrust_n == doctest::Approx(30.0));
  CHECK(req.prop_radius_m == doctest::Approx(0.12));
  CHECK_NOTHROW(req.validate());

  PlannerRequest bad = reference_request(10.0, 0.12);
  bad.payload_weight_n = 0.0;
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
  bad = reference_request(10.0, 0.12);
  bad.safety_factor = 0.9;
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
  bad = reference_request(10.0, 0.12);
  bad.dims_m.z() = -0.1;
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
  bad = reference_request(10.0, 0.12);
  bad.hover_height_m = 0.0;
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
}

TEST_CASE("plans serialize to the documented JSON shape") {
  SUBCASE("feasible plan has a null recommendation") {
    const auto plan = swarmsling::plan(reference_request(10.0, 0.10));
    const auto j = nlohmann::json::parse(swarmsling::plan_to_json(plan));
    CHECK(j.at("n").get<int>() == 7);
    CHECK(j.at("scenario").get<std::string>() == "Feasible");
    CHECK(j.at("attachments").size() == 7);
    CHECK(j.at("attachments")[0].size() == 3);
    CHECK(j.at("recommendation").is_null());
    CHECK(j.at("r_circ_m").get<double>() == doctest::Approx(0.4));
    CHECK(j.at("link_length_m").get<double>() == doctest::Approx(1.0));
    CHECK(j.at("alpha_rad").get<double>() ==
          doctest::Approx(swarmsling::half_vertex_angle(7)));
  }
  SUBCASE("infeasible plan carries the remedy") {
    const auto plan = swarmsling::plan(reference_request(20.0, 0.50));
    const auto j = nlohmann::json::parse(swarmsling::plan_to_json(plan));
    CHECK(j.at("n").get<int>() == 0);
    CHECK(j.at("scenario").get<std::string>() == "Infeasible");
    CHECK(j.at("attachments").empty());
    CHECK(j.at("recommendation").at("max_radius_m").get<double>() > 0.0);
    CHECK(j.at("recommendation").at("min_thrust_N").get<double>() > 0.0);
  }
}

TEST_CASE("plan links pair attachments with the hover height") {
  const auto plan = swarmsling::plan(reference_request(14.0, 0.15));
  const auto links = plan.links();
  REQUIRE(links.size() == 4);
  for (std::size_t i = 0; i < links.size(); ++i) {
    CHECK((links[i].rho - plan.attachments[i]).norm() <= 1e-15);
    CHECK(links[i].l == doctest::Approx(1.0));
  }
}

TEST_CASE("radius policy names round trip") {
  CHECK(swarmsling::to_string(RadiusPolicy::Circumradius) == "circumradius");
  CHECK(swarmsling::to_string(RadiusPolicy::Side) == "side");
  CHECK(swarmsling::radius_policy_from_string("circumradius") ==
        RadiusPolicy::Circumradius);
  CHECK(swarmsling::radius_policy_from_string("side") == RadiusPolicy::Side);
  CHECK_FALSE(swarmsling::radius_policy_from_string("hexagon").has_value());
}

}  // TEST_SUITE("config_planner")

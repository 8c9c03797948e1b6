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

// Microbenchmarks for the hot paths: the coupled derivative evaluation at
// several fleet sizes, one closed-loop controller step, a full simulated
// second, and the static sizing pass.

#include <vector>

#include <benchmark/benchmark.h>

#include "swarmsling/config_planner.hpp"
#include "swarmsling/integrator.hpp"
#include "swarmsling/scenario.hpp"
#include "swarmsling/swarm_dynamics.hpp"
#include "swarmsling/trajectory.hpp"

namespace {

using swarmsling::LinkSpec;
using swarmsling::SystemParams;
using swarmsling::Vec3;

SystemParams fleet_of(int n) {
  const swarmsling::SimScenario stock = swarmsling::SimScenario::defaults();
  const auto layout = swarmsling::attachment_points(
      n, stock.payload.dims, swarmsling::RadiusPolicy::Circumradius);
  std::vector<LinkSpec> links(layout.rho.size());
  for (std::size_t i = 0; i < layout.rho.size(); ++i) {
    links[i] = LinkSpec{layout.rho[i], 1.0};
  }
  return SystemParams::homogeneous(stock.payload, stock.quad,
                                   std::move(links));
}

void BM_SwarmDerivatives(benchmark::State& state) {
  const SystemParams params = fleet_of(static_cast<int>(state.range(0)));
  swarmsling::SwarmState s = swarmsling::hover_state(params);
  for (int i = 0; i < params.n(); ++i) {
    s.links[i].q = (swarmsling::kE3 + 0.1 * Vec3::UnitX()).normalized();
  }
  const swarmsling::SwarmInput input = swarmsling::hover_inputs(params);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        swarmsling::swarm_derivatives(s, input, params));
  }
}
BENCHMARK(BM_SwarmDerivatives)->Arg(1)->Arg(3)->Arg(6)->Arg(12);

void BM_ControllerStep(benchmark::State& state) {
  const swarmsling::SimScenario stock = swarmsling::SimScenario::defaults();
  const auto gains = swarmsling::Gains::defaults_for(stock.quad);
  const auto reference =
      swarmsling::DesiredTrajectory::hover(Vec3::Zero());
  swarmsling::QuadState quad;
  quad.x = Vec3{0.3, -0.2, 0.1};
  const auto sample = reference.at(0.0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        swarmsling::track_step(quad, sample, gains, stock.quad));
  }
}
BENCHMARK(BM_ControllerStep);

void BM_HoverSecond(benchmark::State& state) {
  const SystemParams params = fleet_of(3);
  const swarmsling::SwarmState initial = swarmsling::hover_state(params);
  const auto policy =
      swarmsling::constant_policy(swarmsling::hover_inputs(params));
  swarmsling::IntegratorConfig cfg;
  cfg.dt = 1e-3;
  cfg.t_final = 1.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        swarmsling::simulate(initial, policy, params, cfg));
  }
}
BENCHMARK(BM_HoverSecond)->Unit(benchmark::kMillisecond);

void BM_Plan(benchmark::State& state) {
  swarmsling::PlannerRequest req;
  req.payload_weight_n = 1.5 * 9.81;
  req.quad_weight_n = 0.755 * 9.81;
  req.thrust_n = 12.0;
  req.prop_radius_m = 0.15;
  req.dims_m = Vec3{1.0, 0.8, 0.2};
  for (auto _ : state) {
    benchmark::DoNotOptimize(swarmsling::plan(req));
  }
}
BENCHMARK(BM_Plan);

}  // namespace

BENCHMARK_MAIN();

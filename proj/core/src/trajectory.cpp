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

#include "swarmsling/trajectory.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "csv_util.hpp"

namespace swarmsling {

DesiredTrajectory DesiredTrajectory::hover(const Vec3& point, const Vec3& b1) {
  return DesiredTrajectory([point, b1](double) {
    TrajectorySample s;
    s.x_d = point;
    s.b1_d = b1.normalized();
    return s;
  });
}

DesiredTrajectory DesiredTrajectory::circle(const Vec3& center, double radius,
                                            double period, const Vec3& b1) {
  if (period <= 0.0) {
    throw std::invalid_argument("circle trajectory: period must be positive");
  }
  const double w = 2.0 * std::numbers::pi / period;
  return DesiredTrajectory([center, radius, w, b1](double t) {
    TrajectorySample s;
    const double c = std::cos(w * t);
    const double n = std::sin(w * t);
    s.x_d = center + radius * Vec3{c, n, 0.0};
    s.v_d = radius * w * Vec3{-n, c, 0.0};
    s.a_d = radius * w * w * Vec3{-c, -n, 0.0};
    s.j_d = radius * w * w * w * Vec3{n, -c, 0.0};
    s.s_d = radius * w * w * w * w * Vec3{c, n, 0.0};
    s.b1_d = b1.normalized();
    return s;
  });
}

DesiredTrajectory DesiredTrajectory::line(const Vec3& from, const Vec3& to,
                                          double duration, const Vec3& b1) {
  if (duration <= 0.0) {
    throw std::invalid_argument("line trajectory: duration must be positive");
  }
  const Vec3 velocity = (to - from) / duration;
  return DesiredTrajectory([from, to, velocity, duration, b1](double t) {
    TrajectorySample s;
    if (t <= 0.0) {
      s.x_d = from;
    } else if (t >= duration) {
      s.x_d = to;
    } else {
      s.x_d = from + t * velocity;
      s.v_d = velocity;
    }
    s.b1_d = b1.normalized();
    return s;
  });
}

DesiredTrajectory DesiredTrajectory::from_table_csv(const std::string& path) {
  static const std::vector<std::string> kHeader = {
      "t",   "xd1", "xd2", "xd3", "vd1",  "vd2",  "vd3",
      "ad1", "ad2", "ad3", "b1d1", "b1d2", "b1d3"};
  const detail::CsvTable table = detail::read_numeric_csv(path);
  if (table.header != kHeader) {
    throw std::runtime_error(path + ": unexpected trajectory table header");
  }
  if (table.rows.empty()) {
    throw std::runtime_error(path + ": trajectory table has no samples");
  }
  for (std::size_t i = 1; i < table.rows.size(); ++i) {
    if (table.rows[i][0] <= table.rows[i - 1][0]) {
      throw std::runtime_error(path + ": sample times must strictly increase");
    }
  }
  auto rows = table.rows;
  return DesiredTrajectory([rows = std::move(rows)](double t) {
    auto sample_at = [](const std::vector<double>& r, double blend,
                        const std::vector<double>& r2) {
      TrajectorySample s;
      auto lerp3 = [&](int base) {
        return Vec3{(1.0 - blend) * r[base] + blend * r2[base],
                    (1.0 - blend) * r[base + 1] + blend * r2[base + 1],
                    (1.0 - blend) * r[base + 2] + blend * r2[base + 2]};
      };
      s.x_d = lerp3(1);
      s.v_d = lerp3(4);
      s.a_d = lerp3(7);
      s.b1_d = lerp3(10).normalized();
      return s;
    };
    if (t <= rows.front()[0]) {
      return sample_at(rows.front(), 0.0, rows.front());
    }
    if (t >= rows.back()[0]) {
      return sample_at(rows.back(), 0.0, rows.back());
    }
    // Interpolate between the bracketing samples.
    const auto it = std::upper_bound(
        rows.begin(), rows.end(), t,
        [](double value, const std::vector<double>& r) { return value < r[0]; });
    const std::vector<double>& a = *(it - 1);
    const std::vector<double>& b = *it;
    const double blend = (t - a[0]) / (b[0] - a[0]);
    return sample_at(a, blend, b);
  });
}

}  // namespace swarmsling

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

#include "swarmsling/timeseries.hpp"

#include <cmath>
#include <cstdio>
#include <memory>
#include <stdexcept>

#include "csv_util.hpp"
#include "swarmsling/errors.hpp"

namespace swarmsling {

namespace {

// Columns per sample: payload block then one block per vehicle.
constexpr int kPayloadCols = 19;
constexpr int kQuadCols = 21;

std::string series_header(int n) {
  std::string h = "t,x0x,x0y,x0z,v0x,v0y,v0z";
  for (int r = 1; r <= 3; ++r) {
    for (int c = 1; c <= 3; ++c) {
      h += ",R0_" + std::to_string(r) + std::to_string(c);
    }
  }
  h += ",W0x,W0y,W0z";
  for (int i = 1; i <= n; ++i) {
    const std::string k = std::to_string(i);
    h += ",q" + k + "x,q" + k + "y,q" + k + "z";
    h += ",w" + k + "x,w" + k + "y,w" + k + "z";
    h += ",x" + k + "x,x" + k + "y,x" + k + "z";
    for (int r = 1; r <= 3; ++r) {
      for (int c = 1; c <= 3; ++c) {
        h += ",R" + k + "_" + std::to_string(r) + std::to_string(c);
      }
    }
    h += ",W" + k + "_x,W" + k + "_y,W" + k + "_z";
  }
  return h;
}

void put3(std::vector<double>& row, const Vec3& v) {
  row.push_back(v.x());
  row.push_back(v.y());
  row.push_back(v.z());
}

void put_rotation(std::vector<double>& row, const Mat3& m) {
  for (int r = 0; r < 3; ++r) {
    for (int c = 0; c < 3; ++c) {
      row.push_back(m(r, c));
    }
  }
}

Vec3 get3(const std::vector<double>& row, int at) {
  return Vec3{row[at], row[at + 1], row[at + 2]};
}

Mat3 get_rotation(const std::vector<double>& row, int at) {
  Mat3 m;
  for (int r = 0; r < 3; ++r) {
    for (int c = 0; c < 3; ++c) {
      m(r, c) = row[at + 3 * r + c];
    }
  }
  return m;
}

struct FileCloser {
  void operator()(std::FILE* f) const { std::fclose(f); }
};

}  // namespace

void write_series_csv(const std::string& path, const TimeSeries& series,
                      const std::vector<LinkSpec>& links) {
  const int n = series.n();
  if (static_cast<int>(links.size()) != n) {
    throw BadCount("write_series_csv: link count mismatch");
  }
  std::unique_ptr<std::FILE, FileCloser> f(std::fopen(path.c_str(), "w"));
  if (!f) {
    throw std::runtime_error(path + ": cannot open for writing");
  }
  std::fprintf(f.get(), "%s\n", series_header(n).c_str());
  std::vector<double> row;
  row.reserve(kPayloadCols + kQuadCols * n);
  for (std::size_t k = 0; k < series.states.size(); ++k) {
    const SwarmState& s = series.states[k];
    const auto quads = reconstruct_quads(s, links);
    row.clear();
    row.push_back(series.t[k]);
    put3(row, s.x0);
    put3(row, s.v0);
    put_rotation(row, s.R0);
    put3(row, s.Omega0);
    for (int i = 0; i < n; ++i) {
      put3(row, s.links[i].q);
      put3(row, s.links[i].omega);
      put3(row, quads[i].first);
      put_rotation(row, s.quads[i].R);
      put3(row, s.quads[i].Omega);
    }
    detail::write_csv_row(f.get(), row.data(), static_cast<int>(row.size()));
  }
}

TimeSeries read_series_csv(const std::string& path) {
  const detail::CsvTable table = detail::read_numeric_csv(path);
  const int cols = static_cast<int>(table.header.size());
  if (cols < kPayloadCols + kQuadCols ||
      (cols - kPayloadCols) % kQuadCols != 0) {
    throw std::runtime_error(path + ": not a swarm series (bad column count)");
  }
  const int n = (cols - kPayloadCols) / kQuadCols;
  if (series_header(n) != [&] {
        std::string joined = table.header[0];
        for (int i = 1; i < cols; ++i) {
          joined += "," + table.header[i];
        }
        return joined;
      }()) {
    throw std::runtime_error(path + ": unexpected swarm series header");
  }
  TimeSeries series;
  series.t.reserve(table.rows.size());
  series.states.reserve(table.rows.size());
  for (const std::vector<double>& row : table.rows) {
    series.t.push_back(row[0]);
    SwarmState s;
    s.x0 = get3(row, 1);
    s.v0 = get3(row, 4);
    s.R0 = get_rotation(row, 7);
    s.Omega0 = get3(row, 16);
    s.links.resize(n);
    s.quads.resize(n);
    for (int i = 0; i < n; ++i) {
      const int at = kPayloadCols + kQuadCols * i;
      s.links[i].q = get3(row, at);
      s.links[i].omega = get3(row, at + 3);
      // Columns at+6..at+8 hold the derived vehicle position; the state
      // keeps only the independent coordinates.
      s.quads[i].R = get_rotation(row, at + 9);
      s.quads[i].Omega = get3(row, at + 18);
    }
    series.states.push_back(std::move(s));
  }
  return series;
}

CheckReport check_series(const TimeSeries& series, double tol) {
  CheckReport report;
  for (std::size_t k = 0; k < series.states.size(); ++k) {
    const SwarmState& s = series.states[k];
    const auto fail = [&](const std::string& message) {
      report.ok = false;
      report.row = k + 1;
      report.message = message;
    };
    if (!is_rotation(s.R0, tol)) {
      fail("payload rotation not orthonormal");
      return report;
    }
    for (int i = 0; i < s.n(); ++i) {
      const std::string tag = " (vehicle " + std::to_string(i + 1) + ")";
      if (!is_unit(s.links[i].q, tol)) {
        fail("link direction not unit" + tag);
        return report;
      }
      if (std::abs(s.links[i].q.dot(s.links[i].omega)) > tol) {
        fail("link angular velocity not orthogonal to link" + tag);
        return report;
      }
      if (!is_rotation(s.quads[i].R, tol)) {
        fail("vehicle rotation not orthonormal" + tag);
        return report;
      }
    }
  }
  return report;
}

void write_track_csv(const std::string& path, const QuadTimeSeries& series) {
  std::unique_ptr<std::FILE, FileCloser> f(std::fopen(path.c_str(), "w"));
  if (!f) {
    throw std::runtime_error(path + ": cannot open for writing");
  }
  std::fprintf(f.get(),
               "t,exx,exy,exz,evx,evy,evz,Psi,eRx,eRy,eRz,eWx,eWy,eWz,"
               "f,Mx,My,Mz,f1,f2,f3,f4\n");
  std::vector<double> row;
  row.reserve(22);
  for (std::size_t k = 0; k < series.outputs.size(); ++k) {
    const TrackOutput& out = series.outputs[k];
    row.clear();
    row.push_back(series.t[k]);
    put3(row, out.e_x);
    put3(row, out.e_v);
    row.push_back(out.Psi);
    put3(row, out.e_R);
    put3(row, out.e_Omega);
    row.push_back(out.f);
    put3(row, out.M);
    for (int r = 0; r < 4; ++r) {
      row.push_back(series.rotor_thrusts[k](r));
    }
    detail::write_csv_row(f.get(), row.data(), static_cast<int>(row.size()));
  }
}

}  // namespace swarmsling

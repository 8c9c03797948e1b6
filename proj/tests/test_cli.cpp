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

// End-to-end checks of the installed command-line tool. The binary path is
// injected by the build as SWARMSLING_CLI_PATH.

#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

namespace {

struct CliResult {
  int code = -1;
  std::string out;
};

CliResult run_cli(const std::string& args) {
  const std::string cmd =
      std::string("\"") + SWARMSLING_CLI_PATH + "\" " + args + " 2>/dev/null";
  std::FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  CliResult result;
  char buffer[4096];
  std::size_t got = 0;
  while ((got = std::fread(buffer, 1, sizeof buffer, pipe)) > 0) {
    result.out.append(buffer, got);
  }
  const int status = pclose(pipe);
  result.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

class TempFile {
 public:
  explicit TempFile(const std::string& suffix) {
    static int counter = 0;
    path_ = (std::filesystem::temp_directory_path() /
             ("swarmsling_cli_" + std::to_string(counter++) + suffix))
                .string();
  }
  ~TempFile() {
    std::error_code ec;
    std::filesystem::remove(path_, ec);
  }
  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

const std::string kReferenceWeights =
    "--payload-weight-n 14.715 --quad-weight-n 7.4066 ";

std::vector<std::string> read_lines(const std::string& path) {
  std::ifstream in(path);
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    lines.push_back(line);
  }
  return lines;
}

void write_lines(const std::string& path,
                 const std::vector<std::string>& lines) {
  std::ofstream out(path);
  for (const auto& line : lines) {
    out << line << "\n";
  }
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("plan reports feasibility through the exit code") {
  SUBCASE("comfortable fleet") {
    const auto r = run_cli("plan " + kReferenceWeights +
                           "--thrust-n 10 --quad-radius-m 0.1");
    CHECK(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j.at("n").get<int>() == 7);
    CHECK(j.at("scenario").get<std::string>() == "Feasible");
  }
  SUBCASE("tight spacing falls back to the minimal fleet") {
    const auto r = run_cli("plan " + kReferenceWeights +
                           "--thrust-n 10 --quad-radius-m 0.12");
    CHECK(r.code == 2);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j.at("n").get<int>() == 6);
    CHECK(j.at("scenario").get<std::string>() == "FeasibleWithCaution");
    CHECK_FALSE(j.at("recommendation").is_null());
  }
  SUBCASE("underpowered vehicles cannot carry the load") {
    const auto r = run_cli("plan " + kReferenceWeights +
                           "--thrust-n 7.5 --quad-radius-m 0.15");
    CHECK(r.code == 3);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j.at("n").get<int>() == 0);
    CHECK(j.at("scenario").get<std::string>() == "Infeasible");
    CHECK(j.at("recommendation").at("min_thrust_N").get<double>() > 0.0);
  }
  SUBCASE("one strong vehicle suffices") {
    const auto r = run_cli("plan " + kReferenceWeights +
                           "--safety-factor 1.0 --thrust-n 25 "
                           "--quad-radius-m 0.5");
    CHECK(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j.at("n").get<int>() == 1);
  }
  SUBCASE("plan can write its JSON to a file") {
    TempFile out(".json");
    const auto r = run_cli("plan " + kReferenceWeights +
                           "--thrust-n 10 --quad-radius-m 0.12 --out " +
                           out.path());
    CHECK(r.code == 2);
    std::ifstream in(out.path());
    REQUIRE(in.good());
    nlohmann::json j;
    in >> j;
    CHECK(j.at("n").get<int>() == 6);
  }
}

TEST_CASE("plan rejects malformed invocations") {
  CHECK(run_cli("plan --thrust-n 10").code == 1);
  CHECK(run_cli("plan " + kReferenceWeights +
                "--thrust-n 10 --quad-radius-m 0.1 --dims-m 1x0.8")
            .code == 1);
  CHECK(run_cli("plan " + kReferenceWeights +
                "--thrust-n 10 --quad-radius-m 0.1 --radius-policy hex")
            .code == 1);
  CHECK(run_cli("plan " + kReferenceWeights +
                "--thrust-n 10 --quad-radius-m 0.1 --safety-factor 0.5")
            .code == 1);
  CHECK(run_cli("soar").code == 1);
  CHECK(run_cli("").code == 1);
}

TEST_CASE("hover output passes its own invariant check") {
  TempFile csv(".csv");
  const auto hover =
      run_cli("hover --t-final-s 1 --out " + csv.path());
  CHECK(hover.code == 0);
  CHECK(hover.out.find("vehicles: 3") != std::string::npos);

  double max_dz = -1.0;
  double max_dx = -1.0;
  REQUIRE(std::sscanf(
              hover.out.c_str(),
              "samples: %*u  vehicles: %*d\nmax |dz0| = %le m  max |dx0| = "
              "%le m",
              &max_dz, &max_dx) == 2);
  // The stock scenario is an equilibrium: the payload must not move.
  CHECK(max_dz <= 1e-9);
  CHECK(max_dx <= 1e-9);

  const auto check = run_cli("check " + csv.path());
  CHECK(check.code == 0);
  CHECK(check.out.find("OK:") != std::string::npos);
  CHECK(check.out.find("3 vehicles") != std::string::npos);
}

TEST_CASE("zero duration records a single sample") {
  TempFile csv(".csv");
  const auto r = run_cli("hover --t-final-s 0 --out " + csv.path());
  CHECK(r.code == 0);
  CHECK(r.out.find("samples: 1 ") != std::string::npos);
  CHECK(read_lines(csv.path()).size() == 2);  // header + one row
}

TEST_CASE("a weak vehicle drags the payload off its hover") {
  TempFile scenario(".json");
  std::ofstream(scenario.path()) << R"({
    "inputs": {"thrust_scale": [1.0, 1.0, 0.9]},
    "sim": {"t_final_s": 2.0}
  })";
  const auto r = run_cli("hover --scenario " + scenario.path());
  CHECK(r.code == 0);
  double max_dz = -1.0;
  double max_dx = -1.0;
  REQUIRE(std::sscanf(
              r.out.c_str(),
              "samples: %*u  vehicles: %*d\nmax |dz0| = %le m  max |dx0| = "
              "%le m",
              &max_dz, &max_dx) == 2);
  CHECK(max_dx > 0.01);
}

TEST_CASE("check flags a corrupted series and names the row") {
  TempFile csv(".csv");
  REQUIRE(run_cli("hover --t-final-s 0.01 --out " + csv.path()).code == 0);

  auto lines = read_lines(csv.path());
  REQUIRE(lines.size() >= 3);
  // Break the first link direction in the second data row. The payload
  // block occupies columns 0..18, so q1x is column 19.
  std::vector<std::string> fields;
  std::stringstream ss(lines[2]);
  std::string field;
  while (std::getline(ss, field, ',')) {
    fields.push_back(field);
  }
  REQUIRE(fields.size() > 19);
  fields[19] = "1.5";
  std::string rebuilt = fields[0];
  for (std::size_t i = 1; i < fields.size(); ++i) {
    rebuilt += "," + fields[i];
  }
  lines[2] = rebuilt;
  write_lines(csv.path(), lines);

  const auto r = run_cli("check " + csv.path());
  CHECK(r.code == 3);
  CHECK(r.out.find("violation at row 2") != std::string::npos);
  CHECK(r.out.find("link direction not unit") != std::string::npos);
}

TEST_CASE("check rejects unreadable input") {
  CHECK(run_cli("check /nonexistent/run.csv").code == 1);
  TempFile csv(".csv");
  std::ofstream(csv.path()) << "a,b\n1,2\n";
  CHECK(run_cli("check " + csv.path()).code == 1);
}

TEST_CASE("track runs the stock vehicle against references") {
  SUBCASE("hover point with an offset") {
    TempFile csv(".csv");
    const auto r = run_cli(
        "track --point 0,0,-1 --offset-m 0.5,0,0 --t-final-s 2 --out " +
        csv.path());
    CHECK(r.code == 0);
    CHECK(r.out.find("steps: 2000") != std::string::npos);
    const auto lines = read_lines(csv.path());
    CHECK(lines.size() == 2001);
  }
  SUBCASE("circle") {
    const auto r = run_cli(
        "track --traj circle --radius-m 1 --period-s 10 --t-final-s 2");
    CHECK(r.code == 0);
    CHECK(r.out.find("final second:") != std::string::npos);
  }
  SUBCASE("line with ideal actuation") {
    const auto r = run_cli(
        "track --traj line --from 0,0,0 --to 1,1,-1 --duration-s 3 "
        "--ideal-actuation --t-final-s 2");
    CHECK(r.code == 0);
  }
  SUBCASE("table requires a file") {
    CHECK(run_cli("track --traj table").code == 1);
  }
  SUBCASE("unknown reference") {
    CHECK(run_cli("track --traj warp").code == 1);
  }
  SUBCASE("unparseable triplet") {
    CHECK(run_cli("track --point 0,0").code == 1);
    CHECK(run_cli("track --point a,b,c").code == 1);
  }
}

TEST_CASE("scenario errors surface as bad input") {
  TempFile scenario(".json");
  std::ofstream(scenario.path()) << R"({"engine": "warp"})";
  CHECK(run_cli("hover --scenario " + scenario.path()).code == 1);
  CHECK(run_cli("hover --scenario /nonexistent/s.json").code == 1);
}

}  // TEST_SUITE("cli")

// Copyright 2026 The qcons Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "qcons/cli.hpp"

using namespace qcons;
namespace fs = std::filesystem;

namespace {

struct Result {
  int code = 0;
  std::string out;
  std::string err;
};

Result run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "qcons");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch(const std::string& name) {
  const auto dir = fs::temp_directory_path() / ("qcons_cli_test_" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

fs::path write_json(const fs::path& dir, const std::string& name, const Json& j) {
  const auto path = dir / name;
  std::ofstream(path) << j.dump();
  return path;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

const std::string kScenarios = QCONS_SCENARIO_DIR;

}  // namespace

TEST_CASE("analyze K3") {
  const auto r = run_cli({"analyze", kScenarios + "/k3.json"});
  REQUIRE(r.code == cli::kOk);
  const auto j = Json::parse(r.out);
  CHECK(j["total_components"] == 20);
  CHECK(j["connected"] == true);
  CHECK(j["kernel_dimension"] == 20);
  CHECK(j["lambda2"].get<double>() == doctest::Approx(3.0).epsilon(1e-12));
  CHECK(j["census_matches_traversal"] == true);
  CHECK(j["all_components_regular"] == true);
}

TEST_CASE("analyze disconnected graph warns and omits lambda2") {
  const auto dir = scratch("disc");
  const auto f = write_json(dir, "g.json", {{"n", 3}, {"edges", {{1, 2}}}, {"weights", {1.0}}});
  const auto r = run_cli({"analyze", f.string()});
  REQUIRE(r.code == cli::kOk);
  const auto j = Json::parse(r.out);
  CHECK(j["warning"] == "not connected");
  CHECK_FALSE(j.contains("lambda2"));
}

TEST_CASE("analyze exit codes") {
  const auto dir = scratch("codes");
  const auto big = write_json(dir, "big.json", graph_to_json(InteractionGraph::complete(9)));
  CHECK(run_cli({"analyze", big.string()}).code == cli::kCapExceeded);
  CHECK(run_cli({"analyze", big.string(), "--structural-only"}).code == cli::kOk);

  std::ofstream(dir / "broken.json") << "{\"n\": 3, \"edges\": [[1,";
  CHECK(run_cli({"analyze", (dir / "broken.json").string()}).code == cli::kParseError);
  const auto loop = write_json(dir, "loop.json", {{"n", 3}, {"edges", {{1, 1}}}});
  CHECK(run_cli({"analyze", loop.string()}).code == cli::kParseError);
  CHECK(run_cli({"analyze", (dir / "missing.json").string()}).code == cli::kParseError);
  CHECK(run_cli({"frobnicate"}).code == cli::kParseError);
}

TEST_CASE("optimize exit codes and output") {
  const auto dir = scratch("opt");
  const auto disc = write_json(dir, "d.json", {{"n", 3}, {"edges", {{1, 2}}}});
  CHECK(run_cli({"optimize", disc.string()}).code == cli::kInfeasible);
  const auto r = run_cli({"optimize", kScenarios + "/single_edge.json", "--budget", "1", "--iterations", "5"});
  REQUIRE(r.code == cli::kOk);
  const auto j = Json::parse(r.out);
  CHECK(j["final_lambda2"].get<double>() == doctest::Approx(2.0));
  CHECK(j["lambda2_history"].size() == 6);
}

TEST_CASE("simulate the bundled K3 scenario") {
  const auto dir = scratch("sim");
  const auto r = run_cli({"simulate", kScenarios + "/sec54.json", "--out", dir.string()});
  REQUIRE(r.code == cli::kOk);
  for (const auto* f : {"trajectory.csv", "bloch.csv", "sync.csv", "summary.json"}) CHECK(fs::exists(dir / f));
  const auto summary = Json::parse(slurp(dir / "summary.json"));
  CHECK(summary["sync"]["final_max_distance"].get<double>() <= 1e-6);
  CHECK(summary["sync"]["coinciding_pairs"].size() == 1);

  std::istringstream csv(slurp(dir / "trajectory.csv"));
  std::string header;
  std::getline(csv, header);
  CHECK(header == "t,residual,trace_defect,min_eig,d1,d2,d3");
  std::size_t rows = 0;
  for (std::string line; std::getline(csv, line);) ++rows;
  CHECK(rows == 201);
}

TEST_CASE("simulate is byte-for-byte deterministic") {
  const auto a = scratch("det_a");
  const auto b = scratch("det_b");
  REQUIRE(run_cli({"simulate", kScenarios + "/switching_pos.json", "--out", a.string()}).code == cli::kOk);
  REQUIRE(run_cli({"simulate", kScenarios + "/switching_pos.json", "--out", b.string()}).code == cli::kOk);
  for (const auto* f : {"trajectory.csv", "summary.json"}) CHECK(slurp(a / f) == slurp(b / f));
}

TEST_CASE("simulate a symmetric state keeps the residual at zero") {
  const auto dir = scratch("sym");
  Json scenario = Json::parse(slurp(kScenarios + "/switching_pos.json"));
  Json density = Json::array();
  for (int r = 0; r < 8; ++r) {
    Json row = Json::array();
    for (int c = 0; c < 8; ++c) row.push_back({r == c ? 0.125 : 0.0, 0.0});
    density.push_back(row);
  }
  scenario["initial_state"] = {{"density", density}};
  scenario["t_end"] = 4.0;
  const auto f = write_json(dir, "s.json", scenario);
  const auto r = run_cli({"simulate", f.string(), "--out", (dir / "out").string()});
  REQUIRE(r.code == cli::kOk);
  const auto summary = Json::parse(r.out);
  CHECK(summary["rate"].is_null());
  CHECK(summary.contains("rate_error"));
}

TEST_CASE("simulate with a non-commuting Hamiltonian skips synchronization") {
  const auto dir = scratch("noncomm");
  Json scenario = Json::parse(slurp(kScenarios + "/sec54.json"));
  Json h = Json::array();
  for (int r = 0; r < 8; ++r) {
    Json row = Json::array();
    for (int c = 0; c < 8; ++c) row.push_back({r == c && r == 1 ? 1.0 : 0.0, 0.0});
    h.push_back(row);
  }
  scenario["hamiltonian"] = {{"kind", "dense"}, {"matrix", h}};
  scenario["t_end"] = 1.0;
  const auto f = write_json(dir, "s.json", scenario);
  const auto r = run_cli({"simulate", f.string(), "--out", (dir / "out").string()});
  REQUIRE(r.code == cli::kOk);
  const auto summary = Json::parse(r.out);
  CHECK(summary["sync"]["available"] == false);
  CHECK(summary["sync"].contains("warning"));
  CHECK_FALSE(fs::exists(dir / "out" / "sync.csv"));
}

TEST_CASE("simulate rejects invalid initial states") {
  const auto dir = scratch("badstate");
  Json scenario = Json::parse(slurp(kScenarios + "/sec54.json"));
  scenario["initial_state"]["ket"][4] = {1.0, 0.0};
  const auto f = write_json(dir, "s.json", scenario);
  CHECK(run_cli({"simulate", f.string(), "--out", (dir / "out").string()}).code == cli::kParseError);
}

TEST_CASE("verify passes for n = 2..3") {
  const auto r = run_cli({"verify", "--n-min", "2", "--n-max", "3"});
  CHECK(r.code == cli::kOk);
  CHECK(Json::parse(r.out)["all_passed"] == true);
}

TEST_CASE("installed binary runs end to end") {
  const auto dir = scratch("binary");
  const std::string cmd = std::string("\"") + QCONS_CLI_PATH + "\" analyze \"" + kScenarios +
                          "/k3.json\" --out \"" + (dir / "k3.json").string() + "\"";
  CHECK(std::system(cmd.c_str()) == 0);
  CHECK(Json::parse(slurp(dir / "k3.json"))["total_components"] == 20);
}

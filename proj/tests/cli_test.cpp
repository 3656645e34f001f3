// Copyright 2026 The qwalk Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

#include <gtest/gtest.h>

#include "qwalk/cli/commands.hpp"
#include "qwalk/cli/config.hpp"
#include "qwalk/cli/presets.hpp"
#include "qwalk/cli/verify.hpp"
#include "qwalk/errors.hpp"

namespace qwalk::cli {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;

fs::path scratch(const std::string& name) {
  const fs::path p = fs::temp_directory_path() / "qwalk_cli_test" / name;
  fs::remove_all(p);
  return p;
}

std::map<long, double> read_distribution(const fs::path& path) {
  std::ifstream in(path);
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "x,p");
  std::map<long, double> out;
  while (std::getline(in, line)) {
    const auto comma = line.find(',');
    out[std::stol(line.substr(0, comma))] = std::stod(line.substr(comma + 1));
  }
  return out;
}

double sup_distance(const std::map<long, double>& a, const std::map<long, double>& b) {
  double d = 0.0;
  for (const auto& [x, p] : a) d = std::max(d, std::abs(p - (b.count(x) ? b.at(x) : 0.0)));
  for (const auto& [x, p] : b) d = std::max(d, std::abs(p - (a.count(x) ? a.at(x) : 0.0)));
  return d;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string error_of(const json& j) {
  try {
    parse_config(j);
  } catch (const ValidationError& e) {
    return e.what();
  }
  return "";
}

TEST(Config, RoundTrip) {
  RunConfig c;
  c.mode = Mode::cwalk;
  c.coin.preset.clear();
  c.coin.matrix << cplx(0.6, 0.0), cplx(0.0, 0.8), cplx(0.0, 0.8), cplx(0.6, 0.0);
  c.initial.is_qubit = false;
  c.initial.sites = {{-3, cplx(0.6, 0.1), 0.0}, {4, 0.0, cplx(0.1, -0.78)}};
  const double norm = std::sqrt(0.36 + 0.01 + 0.01 + 0.78 * 0.78);
  for (auto& s : c.initial.sites) {
    s.left /= norm;
    s.right /= norm;
  }
  c.times = {0.1, 1.0 / 3.0, 99.25};
  c.grid = 1024;
  c.y_points = 17;
  c.t = 7.3;
  c.seed = 0xffffffffffffffffULL;
  c.output = "some/dir";
  c.faults = {"cos_h2"};
  const json j = serialize_config(c);
  EXPECT_EQ(parse_config(j), c);
  EXPECT_EQ(serialize_config(parse_config(j)), j);
  EXPECT_EQ(parse_config(json::parse(j.dump())), c);
  for (const std::string& name : preset_names()) {
    const RunConfig p = preset(name);
    EXPECT_EQ(parse_config(serialize_config(p)), p) << name;
  }
}

TEST(Config, PresetFilesMatchBuiltins) {
  std::size_t count = 0;
  for (const auto& entry : fs::directory_iterator(QWALK_PRESET_DIR)) {
    const std::string name = entry.path().stem().string();
    EXPECT_EQ(json::parse(slurp(entry.path())), preset_json(name)) << name;
    ++count;
  }
  EXPECT_EQ(count, preset_names().size());
  EXPECT_THROW(preset("fig9"), ValidationError);
}

TEST(Config, ErrorsNameTheField) {
  EXPECT_NE(error_of({{"steps", -1}}).find("'steps'"), std::string::npos);
  EXPECT_NE(error_of({{"steps", 1.5}}).find("'steps'"), std::string::npos);
  EXPECT_NE(error_of({{"mode", "fly"}}).find("'mode'"), std::string::npos);
  EXPECT_NE(error_of({{"coin", "hadamard"}}).find("'coin'"), std::string::npos);
  EXPECT_NE(error_of({{"coin", json::parse("[[1,0],[0,2]]")}}).find("row 2"), std::string::npos);
  EXPECT_NE(error_of({{"initial", json::parse(R"({"sites": [[0, 1, 0], ["a", 0, 1]]})")}})
                .find("'initial.sites[1][0]'"),
            std::string::npos);
  EXPECT_NE(error_of({{"initial", json::parse(R"({"qubit": [1, 1]})")}}).find("'initial'"),
            std::string::npos);
  EXPECT_NE(error_of({{"times", json::parse("[1, -2]")}}).find("'times[1]'"), std::string::npos);
  EXPECT_NE(error_of({{"mode", "cwalk"}}).find("'times'"), std::string::npos);
  EXPECT_NE(error_of({{"grid", 0}}).find("'grid'"), std::string::npos);
  EXPECT_NE(error_of({{"seed", -4}}).find("'seed'"), std::string::npos);
  EXPECT_NE(error_of({{"faults", json::parse(R"(["boom"])")}}).find("'faults'"),
            std::string::npos);
  EXPECT_NE(error_of({{"stepz", 3}}).find("'stepz'"), std::string::npos);
}

TEST(Commands, WalkZeroStepsIsInitialDistribution) {
  RunConfig c = preset("fig3.3");
  c.steps = 0;
  c.output = scratch("walk0").string();
  cmd_walk(c);
  const auto d = read_distribution(fs::path(c.output) / "walk_n0.csv");
  EXPECT_NEAR(d.at(-10), 0.5, 1e-15);
  EXPECT_NEAR(d.at(10), 0.5, 1e-15);
}

TEST(Commands, InterferenceIsVisible) {
  const auto f31 = run_walk(preset("fig3.1"));
  const auto f32 = run_walk(preset("fig3.2"));
  const auto f33 = run_walk(preset("fig3.3"));
  const auto f34 = run_walk(preset("fig3.4"));
  double vs_mean = 0.0, vs_origin = 0.0;
  for (long x = -1010; x <= 1010; ++x) {
    vs_mean = std::max(vs_mean, std::abs(f33.at(x) - 0.5 * (f31.at(x) + f32.at(x))));
    vs_origin = std::max(vs_origin, std::abs(f33.at(x) - f34.at(x)));
  }
  EXPECT_GT(vs_mean, 1e-3);
  EXPECT_GT(vs_origin, 1e-3);
}

TEST(Commands, ContinuousMatchesDiscreteAcrossCommands) {
  RunConfig w = preset("fig3.3");
  w.steps = 100;
  w.output = scratch("cross_walk").string();
  cmd_walk(w);
  RunConfig c = preset("fig3.5");
  c.times = {0.0, 100.0};
  c.output = scratch("cross_cwalk").string();
  const CommandOutput out = cmd_cwalk(c);
  EXPECT_EQ(out.files.size(), 3u);
  const auto walk = read_distribution(fs::path(w.output) / "walk_n100.csv");
  const auto cwalk = read_distribution(fs::path(c.output) / "cwalk_t100.csv");
  EXPECT_LT(sup_distance(walk, cwalk), 1e-9);
  const auto start = read_distribution(fs::path(c.output) / "cwalk_t0.csv");
  EXPECT_NEAR(start.at(-10), 0.5, 1e-12);
  EXPECT_NEAR(start.at(10), 0.5, 1e-12);
}

TEST(Commands, SnapshotPresetWritesFourFiles) {
  RunConfig c = preset("fig3.5");
  c.output = scratch("fig35").string();
  const CommandOutput out = cmd_cwalk(c);
  ASSERT_EQ(out.files.size(), 5u);
  for (const char* name : {"cwalk_t99.25.csv", "cwalk_t99.5.csv", "cwalk_t99.75.csv",
                           "cwalk_t100.csv", "manifest.json"}) {
    EXPECT_TRUE(fs::exists(fs::path(c.output) / name)) << name;
  }
  for (double total : out.manifest["total_probability"]) EXPECT_NEAR(total, 1.0, 1e-9);
}

TEST(Commands, Density) {
  RunConfig c = preset("hadamard-density");
  c.output = scratch("density").string();
  const CommandOutput out = cmd_density(c);
  const json j = json::parse(slurp(fs::path(c.output) / "density.json"));
  EXPECT_EQ(j["kind"], "density");
  EXPECT_NEAR(j["beta"].get<double>(), 1.0, 1e-15);
  EXPECT_NEAR(j["mass"].get<double>(), 1.0, 1e-6);
  EXPECT_TRUE(fs::exists(fs::path(c.output) / "density.csv"));

  RunConfig b = preset("ballistic");
  b.output = scratch("ballistic").string();
  const json jb = cmd_density(b).manifest;
  EXPECT_EQ(jb["kind"], "point_mass");
  EXPECT_EQ(jb["routing"], "ballistic");
  ASSERT_EQ(jb["atoms"].size(), 2u);
  EXPECT_EQ(jb["atoms"][0][0].get<double>(), -1.0);
  EXPECT_NEAR(jb["atoms"][0][1].get<double>(), 0.36, 1e-15);
  EXPECT_EQ(jb["atoms"][1][0].get<double>(), 1.0);
  EXPECT_NEAR(jb["mass"].get<double>(), 1.0, 1e-15);
}

TEST(Commands, Semigroup) {
  RunConfig c = preset("semigroup");
  c.output = scratch("semigroup").string();
  const json j = cmd_semigroup(c).manifest;
  EXPECT_LT(j["max_conjugation_residual"].get<double>(), 1e-11);
  EXPECT_LT(j["max_semigroup_residual"].get<double>(), 1e-11);
  EXPECT_TRUE(j["positivity"]["passed"].get<bool>());
}

TEST(Commands, Deterministic) {
  for (const char* name : {"fig3.4", "semigroup", "hadamard-density"}) {
    RunConfig c = preset(name);
    c.steps = std::min(c.steps, 200L);
    c.output = scratch(std::string("det_a_") + name).string();
    const CommandOutput a = run_command(c);
    c.output = scratch(std::string("det_b_") + name).string();
    const CommandOutput b = run_command(c);
    ASSERT_EQ(a.files.size(), b.files.size());
    for (std::size_t i = 0; i + 1 < a.files.size(); ++i) {
      EXPECT_EQ(slurp(a.files[i]), slurp(b.files[i])) << a.files[i];
    }
  }
}

TEST(Verify, DefaultRunPasses) {
  RunConfig c = preset("verify");
  c.output = scratch("verify").string();
  const CommandOutput out = cmd_verify(c);
  EXPECT_EQ(out.exit_code, 0) << slurp(fs::path(c.output) / "verify.txt");
  EXPECT_TRUE(out.manifest["passed"].get<bool>());
}

TEST(Verify, CosineAxisFaultFailsUnitNorm) {
  RunConfig c = preset("verify");
  c.faults = {"cos_h2"};
  const VerifyReport r = run_verify(c);
  EXPECT_FALSE(r.passed());
  ASSERT_NE(r.find("spectral.h_unit"), nullptr);
  EXPECT_FALSE(r.find("spectral.h_unit")->passed);
  EXPECT_GT(r.find("spectral.h_unit")->residual, 0.1);
  EXPECT_TRUE(r.find("discrete.fourier_oracle")->passed);
}

TEST(Verify, HalfGridTriggersAliasingGuard) {
  RunConfig c = preset("verify");
  c.faults = {"half_grid"};
  const VerifyReport r = run_verify(c);
  EXPECT_FALSE(r.passed());
  const Check* check = r.find("discrete.fourier_oracle");
  ASSERT_NE(check, nullptr);
  EXPECT_FALSE(check->passed);
  EXPECT_NE(check->note.find("aliasing guard"), std::string::npos);
  EXPECT_TRUE(r.find("spectral.h_unit")->passed);
}

TEST(Format, Digits) {
  EXPECT_EQ(format_double(0.1), "0.10000000000000001");
  EXPECT_EQ(std::stod(format_double(1.0 / 3.0)), 1.0 / 3.0);
  EXPECT_EQ(format_time(99.25), "99.25");
  EXPECT_EQ(format_time(100.0), "100");
}

}  // namespace
}  // namespace qwalk::cli

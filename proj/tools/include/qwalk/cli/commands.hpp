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

#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "qwalk/cli/config.hpp"
#include "qwalk/continuous_walk.hpp"
#include "qwalk/limit_law.hpp"
#include "qwalk/semigroup.hpp"
#include "qwalk/wavefunction.hpp"

namespace qwalk::cli {

/// "%.17g": enough digits to round-trip every double.
std::string format_double(double v);
/// Shortest representation, used in file names.
std::string format_time(double t);

PositionDistribution run_walk(const RunConfig& config);
std::vector<Snapshot> run_cwalk(const RunConfig& config);

struct DensityResult {
  LawKind kind = LawKind::density;
  std::string routing;  // "density", "ballistic" or "flip"
  double support = 0.0;
  std::optional<double> beta;
  double mass = 0.0;
  double mean = 0.0;
  double second_moment = 0.0;
  std::vector<double> y;
  std::vector<double> rho;
  DiscreteLaw atoms;
};
DensityResult run_density(const RunConfig& config);

struct SemigroupNode {
  double k = 0.0;
  double gamma = 0.0;
  Vec3 axis = Vec3::Zero();
  double angle = 0.0;
};
struct SemigroupResult {
  std::vector<SemigroupNode> nodes;
  double max_conjugation_residual = 0.0;
  double max_semigroup_residual = 0.0;
  double identity_residual = 0.0;
  PositivityReport positivity;
};
SemigroupResult run_semigroup(const RunConfig& config);

struct CommandOutput {
  nlohmann::json manifest;
  std::vector<std::filesystem::path> files;
  int exit_code = 0;
};

CommandOutput cmd_walk(const RunConfig& config);
CommandOutput cmd_cwalk(const RunConfig& config);
CommandOutput cmd_density(const RunConfig& config);
CommandOutput cmd_semigroup(const RunConfig& config);
CommandOutput cmd_verify(const RunConfig& config);

/// Dispatches on config.mode.
CommandOutput run_command(const RunConfig& config);

}  // namespace qwalk::cli

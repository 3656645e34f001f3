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

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "qwalk/cli/config.hpp"

namespace qwalk::cli {

struct Check {
  std::string name;
  double residual = 0.0;
  double tolerance = 0.0;
  bool passed = false;
  std::string note;
};

struct VerifyReport {
  std::vector<Check> checks;

  bool passed() const;
  const Check* find(const std::string& name) const;
  std::string text() const;
  nlohmann::json to_json() const;
};

/// Runs the invariant suite at the config's seed, honoring config.faults.
VerifyReport run_verify(const RunConfig& config);

}  // namespace qwalk::cli

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

#include "qwalk/cli/presets.hpp"

#include <map>

#include "qwalk/errors.hpp"

namespace qwalk::cli {

namespace {

// Kept byte-for-byte in sync with tools/presets/*.json (checked by the tests).
const std::map<std::string, const char*>& table() {
  static const std::map<std::string, const char*> presets{
      {"fig3.1", R"({
  "mode": "walk",
  "coin": "hadamard-switched",
  "initial": {"sites": [[10, 0, 1]]},
  "steps": 1000,
  "output": "out/fig3.1"
})"},
      {"fig3.2", R"({
  "mode": "walk",
  "coin": "hadamard-switched",
  "initial": {"sites": [[-10, 1, 0]]},
  "steps": 1000,
  "output": "out/fig3.2"
})"},
      {"fig3.3", R"({
  "mode": "walk",
  "coin": "hadamard-switched",
  "initial": {"sites": [[-10, 0.7071067811865476, 0], [10, 0, 0.7071067811865476]]},
  "steps": 1000,
  "output": "out/fig3.3"
})"},
      {"fig3.4", R"({
  "mode": "walk",
  "coin": "hadamard-switched",
  "initial": {"qubit": [0.7071067811865476, 0.7071067811865476]},
  "steps": 1000,
  "output": "out/fig3.4"
})"},
      {"fig3.5", R"({
  "mode": "cwalk",
  "coin": "hadamard-switched",
  "initial": {"sites": [[-10, 0.7071067811865476, 0], [10, 0, 0.7071067811865476]]},
  "times": [99.25, 99.5, 99.75, 100],
  "output": "out/fig3.5"
})"},
      {"ballistic", R"({
  "mode": "density",
  "coin": [[[0.8660254037844386, 0.5], 0], [0, [0.8660254037844386, -0.5]]],
  "initial": {"qubit": [0.6, [0, 0.8]]},
  "output": "out/ballistic"
})"},
      {"hadamard-density", R"({
  "mode": "density",
  "coin": "hadamard-switched",
  "initial": {"qubit": [1, 0]},
  "y_points": 201,
  "output": "out/hadamard-density"
})"},
      {"semigroup", R"({
  "mode": "semigroup",
  "coin": "hadamard-switched",
  "grid": 256,
  "t": 7.3,
  "seed": 0,
  "output": "out/semigroup"
})"},
      {"verify", R"({
  "mode": "verify",
  "seed": 0,
  "output": "out/verify"
})"},
  };
  return presets;
}

}  // namespace

std::vector<std::string> preset_names() {
  std::vector<std::string> names;
  for (const auto& [name, text] : table()) names.push_back(name);
  return names;
}

nlohmann::json preset_json(const std::string& name) {
  const auto it = table().find(name);
  if (it == table().end()) throw ValidationError("unknown preset '" + name + "'");
  return nlohmann::json::parse(it->second);
}

RunConfig preset(const std::string& name) { return parse_config(preset_json(name)); }

}  // namespace qwalk::cli

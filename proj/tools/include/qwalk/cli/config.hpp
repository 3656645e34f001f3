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

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "qwalk/coin.hpp"
#include "qwalk/wavefunction.hpp"

namespace qwalk::cli {

enum class Mode { walk, cwalk, density, semigroup, verify };

std::string to_string(Mode mode);
Mode parse_mode(const std::string& name);

/// Either a named coin or an explicit 2x2 matrix.
struct CoinSpec {
  std::string preset;  // empty when `matrix` is used
  Mat2 matrix = Mat2::Identity();

  Coin build() const;
  bool operator==(const CoinSpec&) const = default;
};

/// Either a qubit at the origin or an explicit site list.
struct StateSpec {
  bool is_qubit = true;
  cplx a{1.0, 0.0};
  cplx b{0.0, 0.0};
  std::vector<WaveFunction::Site> sites;

  WaveFunction build() const;
  bool operator==(const StateSpec& other) const;
};

struct RunConfig {
  Mode mode = Mode::walk;
  CoinSpec coin{"hadamard-switched", Mat2::Identity()};
  StateSpec initial;
  long steps = 0;
  std::vector<double> times;
  std::optional<std::size_t> grid;
  std::size_t y_points = 201;
  double t = 1.0;
  std::uint64_t seed = 0;
  std::string output = "out";
  /// Deliberate faults for the verify suite: "cos_h2", "half_grid".
  std::vector<std::string> faults;

  bool operator==(const RunConfig&) const = default;
};

/// Throws ValidationError naming the offending field.
RunConfig parse_config(const nlohmann::json& j);
RunConfig load_config(const std::string& path);
nlohmann::json serialize_config(const RunConfig& config);

/// Checks ranges that the JSON shape alone does not enforce.
void validate(const RunConfig& config);

}  // namespace qwalk::cli

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

#include "qwalk/cli/config.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>

#include "qwalk/errors.hpp"

namespace qwalk::cli {

using nlohmann::json;

namespace {

constexpr const char* kModes[] = {"walk", "cwalk", "density", "semigroup", "verify"};
constexpr const char* kFaults[] = {"cos_h2", "half_grid"};

[[noreturn]] void fail(const std::string& field, const std::string& what) {
  throw ValidationError("config field '" + field + "': " + what);
}

cplx parse_complex(const json& j, const std::string& field) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
    fail(field, "expected a number or [re, im]");
  }
  return {j[0].get<double>(), j[1].get<double>()};
}

json complex_json(cplx z) { return json::array({z.real(), z.imag()}); }

template <typename T>
T get_number(const json& j, const std::string& field) {
  if (!j.is_number()) fail(field, "expected a number");
  if constexpr (std::is_integral_v<T>) {
    if (!j.is_number_integer()) fail(field, "expected an integer");
    if constexpr (std::is_unsigned_v<T>) {
      if (j.is_number_integer() && !j.is_number_unsigned() && j.get<long long>() < 0) {
        fail(field, "must be nonnegative");
      }
    }
  }
  return j.get<T>();
}

CoinSpec parse_coin(const json& j) {
  CoinSpec spec;
  if (j.is_string()) {
    spec.preset = j.get<std::string>();
    try {
      spec.build();
    } catch (const ValidationError&) {
      fail("coin", "unknown coin preset '" + spec.preset + "'");
    }
    return spec;
  }
  if (!j.is_array() || j.size() != 2 || !j[0].is_array() || j[0].size() != 2 ||
      !j[1].is_array() || j[1].size() != 2) {
    fail("coin", "expected a preset name or a 2x2 matrix of [re, im] entries");
  }
  spec.preset.clear();
  for (int r = 0; r < 2; ++r) {
    for (int c = 0; c < 2; ++c) {
      spec.matrix(r, c) = parse_complex(j[r][c], "coin[" + std::to_string(r) + "][" +
                                                    std::to_string(c) + "]");
    }
  }
  try {
    spec.build();
  } catch (const ValidationError& e) {
    fail("coin", e.what());
  }
  return spec;
}

StateSpec parse_state(const json& j) {
  StateSpec spec;
  if (!j.is_object()) fail("initial", "expected {\"qubit\": ...} or {\"sites\": ...}");
  if (j.contains("qubit") == j.contains("sites")) {
    fail("initial", "exactly one of 'qubit' or 'sites' is required");
  }
  if (j.contains("qubit")) {
    const json& q = j["qubit"];
    if (!q.is_array() || q.size() != 2) fail("initial.qubit", "expected [a, b]");
    spec.is_qubit = true;
    spec.a = parse_complex(q[0], "initial.qubit[0]");
    spec.b = parse_complex(q[1], "initial.qubit[1]");
  } else {
    const json& s = j["sites"];
    if (!s.is_array() || s.empty()) fail("initial.sites", "expected a nonempty list");
    spec.is_qubit = false;
    for (std::size_t i = 0; i < s.size(); ++i) {
      const std::string field = "initial.sites[" + std::to_string(i) + "]";
      if (!s[i].is_array() || s[i].size() != 3) fail(field, "expected [x, left, right]");
      spec.sites.push_back({get_number<long>(s[i][0], field + "[0]"),
                            parse_complex(s[i][1], field + "[1]"),
                            parse_complex(s[i][2], field + "[2]")});
    }
  }
  WaveFunction psi = WaveFunction::localized(0, 1, 0);
  try {
    psi = spec.build();
  } catch (const ValidationError& e) {
    fail("initial", e.what());
  }
  if (std::abs(psi.norm_squared() - 1.0) > 1e-10) {
    fail("initial", "state must have unit norm, got squared norm " +
                        std::to_string(psi.norm_squared()));
  }
  return spec;
}

}  // namespace

std::string to_string(Mode mode) { return kModes[static_cast<int>(mode)]; }

Mode parse_mode(const std::string& name) {
  for (int i = 0; i < 5; ++i) {
    if (name == kModes[i]) return static_cast<Mode>(i);
  }
  fail("mode", "unknown mode '" + name + "'");
}

Coin CoinSpec::build() const {
  if (preset.empty()) return Coin::normalize_phase(matrix);
  if (preset == "hadamard-switched") return Coin::hadamard_switched();
  if (preset == "identity") return Coin::normalize_phase(Mat2::Identity());
  if (preset == "flip") return Coin::from_top_row(0.0, cplx(0.0, 1.0));
  throw ValidationError("unknown coin preset '" + preset + "'");
}

WaveFunction StateSpec::build() const {
  if (is_qubit) return WaveFunction::localized(0, a, b);
  return WaveFunction::from_sites(sites);
}

bool StateSpec::operator==(const StateSpec& other) const {
  if (is_qubit != other.is_qubit) return false;
  if (is_qubit) return a == other.a && b == other.b;
  if (sites.size() != other.sites.size()) return false;
  for (std::size_t i = 0; i < sites.size(); ++i) {
    const auto& s = sites[i];
    const auto& o = other.sites[i];
    if (s.x != o.x || s.left != o.left || s.right != o.right) return false;
  }
  return true;
}

RunConfig parse_config(const json& j) {
  if (!j.is_object()) fail("<root>", "expected a JSON object");
  static const std::vector<std::string> known{"mode", "coin", "initial", "steps", "times",
                                              "grid", "y_points", "t", "seed", "output",
                                              "faults"};
  for (const auto& [key, value] : j.items()) {
    if (std::find(known.begin(), known.end(), key) == known.end()) fail(key, "unknown field");
  }
  RunConfig c;
  if (j.contains("mode")) {
    if (!j["mode"].is_string()) fail("mode", "expected a string");
    c.mode = parse_mode(j["mode"].get<std::string>());
  }
  if (j.contains("coin")) c.coin = parse_coin(j["coin"]);
  if (j.contains("initial")) c.initial = parse_state(j["initial"]);
  if (j.contains("steps")) c.steps = get_number<long>(j["steps"], "steps");
  if (j.contains("times")) {
    if (!j["times"].is_array()) fail("times", "expected a list of numbers");
    for (std::size_t i = 0; i < j["times"].size(); ++i) {
      c.times.push_back(get_number<double>(j["times"][i], "times[" + std::to_string(i) + "]"));
    }
  }
  if (j.contains("grid") && !j["grid"].is_null()) {
    c.grid = get_number<std::size_t>(j["grid"], "grid");
  }
  if (j.contains("y_points")) c.y_points = get_number<std::size_t>(j["y_points"], "y_points");
  if (j.contains("t")) c.t = get_number<double>(j["t"], "t");
  if (j.contains("seed")) c.seed = get_number<std::uint64_t>(j["seed"], "seed");
  if (j.contains("output")) {
    if (!j["output"].is_string()) fail("output", "expected a string");
    c.output = j["output"].get<std::string>();
  }
  if (j.contains("faults")) {
    if (!j["faults"].is_array()) fail("faults", "expected a list of strings");
    for (const json& f : j["faults"]) {
      if (!f.is_string()) fail("faults", "expected a list of strings");
      c.faults.push_back(f.get<std::string>());
    }
  }
  validate(c);
  return c;
}

void validate(const RunConfig& c) {
  if (c.steps < 0) fail("steps", "must be >= 0");
  for (std::size_t i = 0; i < c.times.size(); ++i) {
    if (!(c.times[i] >= 0.0) || !std::isfinite(c.times[i])) {
      fail("times[" + std::to_string(i) + "]", "must be finite and >= 0");
    }
  }
  if (c.mode == Mode::cwalk && c.times.empty()) fail("times", "cwalk needs at least one time");
  if (c.grid && *c.grid == 0) fail("grid", "must be positive");
  if (c.y_points < 2) fail("y_points", "must be at least 2");
  if (!std::isfinite(c.t)) fail("t", "must be finite");
  if (c.output.empty()) fail("output", "must not be empty");
  for (const std::string& f : c.faults) {
    if (std::find(std::begin(kFaults), std::end(kFaults), f) == std::end(kFaults)) {
      fail("faults", "unknown fault '" + f + "'");
    }
  }
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail("--config", "cannot open '" + path + "'");
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    fail("--config", std::string("invalid JSON: ") + e.what());
  }
  return parse_config(j);
}

json serialize_config(const RunConfig& c) {
  json j;
  j["mode"] = to_string(c.mode);
  if (!c.coin.preset.empty()) {
    j["coin"] = c.coin.preset;
  } else {
    j["coin"] = json::array();
    for (int r = 0; r < 2; ++r) {
      j["coin"].push_back(json::array({complex_json(c.coin.matrix(r, 0)),
                                       complex_json(c.coin.matrix(r, 1))}));
    }
  }
  if (c.initial.is_qubit) {
    j["initial"] = {{"qubit", json::array({complex_json(c.initial.a),
                                           complex_json(c.initial.b)})}};
  } else {
    json sites = json::array();
    for (const auto& s : c.initial.sites) {
      sites.push_back(json::array({s.x, complex_json(s.left), complex_json(s.right)}));
    }
    j["initial"] = {{"sites", sites}};
  }
  j["steps"] = c.steps;
  j["times"] = c.times;
  j["grid"] = c.grid ? json(*c.grid) : json(nullptr);
  j["y_points"] = c.y_points;
  j["t"] = c.t;
  j["seed"] = c.seed;
  j["output"] = c.output;
  j["faults"] = c.faults;
  return j;
}

}  // namespace qwalk::cli

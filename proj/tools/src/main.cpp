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

#include <cstdlib>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "qwalk/cli/commands.hpp"
#include "qwalk/cli/presets.hpp"
#include "qwalk/errors.hpp"

namespace {

int run(int argc, char** argv) {
  using namespace qwalk::cli;
  CLI::App app{"Coined quantum walk simulator"};
  app.require_subcommand(0, 1);

  std::string mode_name;
  std::string config_path;
  std::string preset_name;
  std::string out_dir;
  std::size_t grid = 0;
  std::uint64_t seed = 0;
  std::vector<std::string> faults;
  bool list_presets = false;

  app.add_flag("--list-presets", list_presets, "Print the built-in preset names");
  const std::pair<const char*, const char*> commands[] = {
      {"walk", "Discrete-time walk, position distribution after n steps"},
      {"cwalk", "Continuous-time interpolation at real times t"},
      {"density", "Weak limit law of X_n / n"},
      {"semigroup", "Heisenberg flow of a direct-integral observable"},
      {"verify", "Run the built-in self-checks"},
  };
  for (const auto& [name, help] : commands) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->callback([&mode_name, name] { mode_name = name; });
    sub->add_option("--config", config_path, "JSON run configuration");
    sub->add_option("--preset", preset_name, "Built-in configuration");
    sub->add_option("--out", out_dir, "Output directory");
    sub->add_option("--grid", grid, "Momentum grid size")->check(CLI::PositiveNumber);
    sub->add_option("--seed", seed, "Random seed");
    if (std::string(name) == "verify") {
      sub->add_option("--fault", faults, "Inject a fault: cos_h2, half_grid");
    }
  }
  CLI11_PARSE(app, argc, argv);

  if (list_presets) {
    for (const std::string& p : preset_names()) std::cout << p << '\n';
    return 0;
  }
  if (mode_name.empty()) {
    std::cerr << app.help();
    return 1;
  }

  try {
    if (!config_path.empty() && !preset_name.empty()) {
      throw qwalk::ValidationError("--config and --preset are exclusive");
    }
    RunConfig config;
    if (!config_path.empty()) {
      config = load_config(config_path);
    } else if (!preset_name.empty()) {
      config = preset(preset_name);
    }
    config.mode = parse_mode(mode_name);
    if (const char* env = std::getenv("QWALK_OUT_DIR"); env != nullptr && *env != '\0') {
      config.output = env;
    }
    if (!out_dir.empty()) config.output = out_dir;
    if (grid != 0) config.grid = grid;
    if (app.get_subcommand(mode_name)->count("--seed") > 0) config.seed = seed;
    for (const std::string& f : faults) config.faults.push_back(f);
    validate(config);

    const CommandOutput out = run_command(config);
    if (config.mode == Mode::verify) {
      std::ifstream text(std::filesystem::path(config.output) / "verify.txt");
      std::cout << text.rdbuf();
    }
    for (const auto& f : out.files) std::cout << "wrote " << f.string() << '\n';
    return out.exit_code;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::filesystem::filesystem_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }

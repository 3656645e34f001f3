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

#include "qwalk/cli/commands.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>

#include "qwalk/cli/verify.hpp"
#include "qwalk/discrete_walk.hpp"
#include "qwalk/errors.hpp"
#include "qwalk/spectral.hpp"

namespace qwalk::cli {

namespace fs = std::filesystem;
using nlohmann::json;

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string format_time(double t) {
  char buf[32];
  const auto r = std::to_chars(buf, buf + sizeof buf, t);
  return std::string(buf, r.ptr);
}

namespace {

std::ofstream open_output(const fs::path& path) {
  fs::create_directories(path.parent_path());
  std::ofstream out(path);
  if (!out) throw ValidationError("output: cannot write '" + path.string() + "'");
  return out;
}

fs::path write_distribution(const fs::path& path, const PositionDistribution& d) {
  std::ofstream out = open_output(path);
  out << "x,p\n";
  for (long x = d.x_min; x <= d.x_max(); ++x) out << x << ',' << format_double(d.at(x)) << '\n';
  return path;
}

void write_manifest(CommandOutput& result, const fs::path& dir, const std::string& name) {
  const fs::path path = dir / name;
  json files = json::array();
  for (const fs::path& f : result.files) files.push_back(f.filename().string());
  result.manifest["files"] = files;
  open_output(path) << result.manifest.dump(2) << '\n';
  result.files.push_back(path);
}

json json_or_null(std::optional<double> v) { return v ? json(*v) : json(nullptr); }

}  // namespace

PositionDistribution run_walk(const RunConfig& config) {
  const Coin coin = config.coin.build();
  const WaveFunction psi0 = config.initial.build();
  if (config.grid) {
    return position_distribution(fourier_evolve(psi0, coin, config.steps, MomentumGrid(*config.grid)));
  }
  return position_distribution(evolve(psi0, coin, config.steps));
}

std::vector<Snapshot> run_cwalk(const RunConfig& config) {
  const Coin coin = config.coin.build();
  const WaveFunction psi0 = config.initial.build();
  if (!config.grid) return snapshot_series(psi0, config.times, coin);
  const MomentumGrid grid(*config.grid);
  std::vector<Snapshot> out;
  for (double t : config.times) out.push_back({t, evolve_continuous(psi0, t, coin, grid)});
  return out;
}

DensityResult run_density(const RunConfig& config) {
  const Coin coin = config.coin.build();
  const WaveFunction psi0 = config.initial.build();
  const LimitLaw law = limit_law(coin, psi0);
  DensityResult r;
  r.kind = law.kind();
  r.routing = coin.has_density() ? "density" : coin.is_flip() ? "flip" : "ballistic";
  r.support = law.support_radius();
  r.beta = law.beta();
  r.mass = law.mass();
  r.mean = law.mean();
  r.second_moment = law.second_moment();
  if (law.kind() == LawKind::point_mass) {
    r.atoms = law.atoms();
    return r;
  }
  const double a = r.support;
  const auto n = config.y_points;
  for (std::size_t i = 0; i < n; ++i) {
    const double y = -a + 2.0 * a * static_cast<double>(i + 1) / static_cast<double>(n + 1);
    r.y.push_back(y);
    r.rho.push_back(law.pdf(y));
  }
  return r;
}

SemigroupResult run_semigroup(const RunConfig& config) {
  const Coin coin = config.coin.build();
  const MomentumGrid grid(config.grid.value_or(256));
  const double t = config.t;
  SemigroupResult r;
  const DirectIntegralObservable obs = random_hermitian_observable(grid, config.seed);
  const DirectIntegralObservable evolved = heisenberg_evolve(obs, t, coin);
  const DirectIntegralObservable id =
      heisenberg_evolve(DirectIntegralObservable::constant(grid, Mat2::Identity()), t, coin);
  for (std::size_t j = 0; j < grid.size(); ++j) {
    const double k = grid.node(j);
    const PauliFlow flow = pauli_flow(k, t, coin);
    r.nodes.push_back({k, flow.gamma, flow.axis, 2.0 * flow.gamma * t});
    const Mat2 direct = conjugate_evolve(k, t, obs.matrix(j), coin);
    r.max_conjugation_residual = std::max(
        r.max_conjugation_residual, (evolved.matrix(j) - direct).cwiseAbs().maxCoeff());
    const Mat3 composed = pauli_flow(k, 0.5 * t, coin).coefficient_action *
                          pauli_flow(k, 0.5 * t, coin).coefficient_action;
    r.max_semigroup_residual = std::max(
        r.max_semigroup_residual, (composed - flow.coefficient_action).cwiseAbs().maxCoeff());
    r.identity_residual = std::max(
        r.identity_residual, (id.matrix(j) - Mat2::Identity()).cwiseAbs().maxCoeff());
  }
  r.positivity = positivity_check(random_psd_observable(grid, config.seed), t, coin);
  return r;
}

CommandOutput cmd_walk(const RunConfig& config) {
  const PositionDistribution d = run_walk(config);
  const fs::path dir = config.output;
  CommandOutput out;
  out.files.push_back(
      write_distribution(dir / ("walk_n" + std::to_string(config.steps) + ".csv"), d));
  out.manifest = {{"mode", "walk"},
                  {"config", serialize_config(config)},
                  {"steps", config.steps},
                  {"x_min", d.x_min},
                  {"x_max", d.x_max()},
                  {"total_probability", d.total()}};
  write_manifest(out, dir, "manifest.json");
  return out;
}

CommandOutput cmd_cwalk(const RunConfig& config) {
  const std::vector<Snapshot> series = run_cwalk(config);
  const fs::path dir = config.output;
  CommandOutput out;
  json norms = json::array();
  for (const Snapshot& s : series) {
    out.files.push_back(write_distribution(dir / ("cwalk_t" + format_time(s.t) + ".csv"),
                                           position_distribution(s.psi)));
    norms.push_back(s.psi.norm_squared());
  }
  out.manifest = {{"mode", "cwalk"},
                  {"config", serialize_config(config)},
                  {"times", config.times},
                  {"total_probability", norms}};
  write_manifest(out, dir, "manifest.json");
  return out;
}

CommandOutput cmd_density(const RunConfig& config) {
  const DensityResult r = run_density(config);
  const fs::path dir = config.output;
  CommandOutput out;
  if (r.kind == LawKind::density) {
    std::ofstream csv = open_output(dir / "density.csv");
    csv << "y,rho\n";
    for (std::size_t i = 0; i < r.y.size(); ++i) {
      csv << format_double(r.y[i]) << ',' << format_double(r.rho[i]) << '\n';
    }
    out.files.push_back(dir / "density.csv");
  } else {
    std::ofstream csv = open_output(dir / "atoms.csv");
    csv << "location,weight\n";
    for (const Atom& a : r.atoms.atoms()) {
      csv << format_double(a.location) << ',' << format_double(a.weight) << '\n';
    }
    out.files.push_back(dir / "atoms.csv");
  }
  json atoms = json::array();
  for (const Atom& a : r.atoms.atoms()) atoms.push_back({a.location, a.weight});
  out.manifest = {{"mode", "density"},
                  {"config", serialize_config(config)},
                  {"kind", r.kind == LawKind::density ? "density" : "point_mass"},
                  {"routing", r.routing},
                  {"support", {-r.support, r.support}},
                  {"beta", json_or_null(r.beta)},
                  {"mass", r.mass},
                  {"mean", r.mean},
                  {"second_moment", r.second_moment},
                  {"atoms", atoms}};
  write_manifest(out, dir, "density.json");
  return out;
}

CommandOutput cmd_semigroup(const RunConfig& config) {
  const SemigroupResult r = run_semigroup(config);
  const fs::path dir = config.output;
  CommandOutput out;
  {
    std::ofstream csv = open_output(dir / "semigroup.csv");
    csv << "k,gamma,h1,h2,h3,angle\n";
    for (const SemigroupNode& n : r.nodes) {
      csv << format_double(n.k) << ',' << format_double(n.gamma) << ','
          << format_double(n.axis(0)) << ',' << format_double(n.axis(1)) << ','
          << format_double(n.axis(2)) << ',' << format_double(n.angle) << '\n';
    }
  }
  out.files.push_back(dir / "semigroup.csv");
  out.manifest = {{"mode", "semigroup"},
                  {"config", serialize_config(config)},
                  {"t", config.t},
                  {"max_conjugation_residual", r.max_conjugation_residual},
                  {"max_semigroup_residual", r.max_semigroup_residual},
                  {"identity_residual", r.identity_residual},
                  {"positivity",
                   {{"passed", r.positivity.passed},
                    {"max_spectrum_drift", r.positivity.max_spectrum_drift},
                    {"min_eigenvalue_before", r.positivity.min_eigenvalue_before},
                    {"min_eigenvalue_after", r.positivity.min_eigenvalue_after}}}};
  write_manifest(out, dir, "semigroup.json");
  return out;
}

CommandOutput cmd_verify(const RunConfig& config) {
  const VerifyReport report = run_verify(config);
  const fs::path dir = config.output;
  CommandOutput out;
  open_output(dir / "verify.txt") << report.text();
  out.files.push_back(dir / "verify.txt");
  out.manifest = report.to_json();
  out.manifest["config"] = serialize_config(config);
  write_manifest(out, dir, "verify.json");
  out.exit_code = report.passed() ? 0 : 2;
  return out;
}

CommandOutput run_command(const RunConfig& config) {
  switch (config.mode) {
    case Mode::walk: return cmd_walk(config);
    case Mode::cwalk: return cmd_cwalk(config);
    case Mode::density: return cmd_density(config);
    case Mode::semigroup: return cmd_semigroup(config);
    case Mode::verify: return cmd_verify(config);
  }
  throw ValidationError("mode: unhandled");
}

}  // namespace qwalk::cli

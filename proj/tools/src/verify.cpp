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

#include "qwalk/cli/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>

#include "qwalk/qwalk.hpp"

namespace qwalk::cli {

namespace {

constexpr double kSqrtHalf = 0.70710678118654752;

Coin seeded_coin(std::mt19937_64& rng) {
  std::normal_distribution<double> n;
  for (;;) {
    const cplx l1(n(rng), n(rng));
    const cplx l2(n(rng), n(rng));
    const double norm = std::sqrt(std::norm(l1) + std::norm(l2));
    if (std::abs(l1) > 0.1 * norm && std::abs(l2) > 0.1 * norm) {
      return Coin::from_top_row(l1 / norm, l2 / norm);
    }
  }
}

WaveFunction seeded_state(std::mt19937_64& rng, long x_min, std::size_t width) {
  std::normal_distribution<double> n;
  std::vector<Spinor> amps(width);
  double total = 0.0;
  for (auto& v : amps) {
    v = Spinor(cplx(n(rng), n(rng)), cplx(n(rng), n(rng)));
    total += v.squaredNorm();
  }
  for (auto& v : amps) v /= std::sqrt(total);
  return WaveFunction(x_min, amps);
}

double sup_distance(const WaveFunction& a, const WaveFunction& b) {
  double d = 0.0;
  for (long x = std::min(a.x_min(), b.x_min()); x <= std::max(a.x_max(), b.x_max()); ++x) {
    d = std::max(d, (a.at(x) - b.at(x)).cwiseAbs().maxCoeff());
  }
  return d;
}

double max_abs(const Mat2& m) { return m.cwiseAbs().maxCoeff(); }

class Suite {
 public:
  explicit Suite(const RunConfig& config)
      : cos_h2_(has(config, "cos_h2")), half_grid_(has(config, "half_grid")), rng_(config.seed) {
    coins_.push_back(Coin::hadamard_switched());
    for (int i = 0; i < 4; ++i) coins_.push_back(seeded_coin(rng_));
  }

  VerifyReport run() {
    core_types();
    discrete();
    spectral();
    continuous();
    limit();
    semigroup();
    return report_;
  }

 private:
  static bool has(const RunConfig& c, const std::string& f) {
    return std::find(c.faults.begin(), c.faults.end(), f) != c.faults.end();
  }

  void add(const std::string& name, double tolerance, const std::function<double()>& f) {
    Check c{name, 0.0, tolerance, false, ""};
    try {
      c.residual = f();
      c.passed = std::isfinite(c.residual) && c.residual <= tolerance;
    } catch (const AliasingError& e) {
      c.residual = INFINITY;
      c.note = std::string("aliasing guard: ") + e.what();
    } catch (const std::exception& e) {
      c.residual = INFINITY;
      c.note = e.what();
    }
    report_.checks.push_back(c);
  }

  MomentumGrid walk_grid(std::size_t width, std::size_t duration,
                         std::size_t padding = 0) const {
    const MomentumGrid g = MomentumGrid::for_duration(width, duration, padding);
    return half_grid_ ? MomentumGrid(g.size() / 2) : g;
  }

  void core_types() {
    add("coin.relations", 1e-12, [&] {
      double r = 0.0;
      for (const Coin& c : coins_) {
        const Mat2& u = c.matrix();
        r = std::max({r, max_abs(u * u.adjoint() - Mat2::Identity()),
                      std::abs(u.determinant() - 1.0), std::abs(c.r1() + std::conj(c.l2())),
                      std::abs(c.r2() - std::conj(c.l1()))});
      }
      return r;
    });
    add("fourier.round_trip", 1e-12, [&] {
      const WaveFunction psi = seeded_state(rng_, -5, 11);
      const MomentumGrid grid(64);
      const WaveFunction back = inverse_fourier(fourier_transform(psi, grid), -5, 11);
      return sup_distance(psi, back);
    });
    add("pauli.round_trip", 1e-14, [&] {
      std::normal_distribution<double> n;
      Mat2 a;
      a << cplx(n(rng_), n(rng_)), cplx(n(rng_), n(rng_)), cplx(n(rng_), n(rng_)),
          cplx(n(rng_), n(rng_));
      return max_abs(pauli_compose(pauli_decompose(a)) - a);
    });
  }

  void discrete() {
    add("discrete.fourier_oracle", 1e-9, [&] {
      double r = 0.0;
      for (const Coin& c : coins_) {
        const WaveFunction psi0 = WaveFunction::localized(0, kSqrtHalf, cplx(0, kSqrtHalf));
        r = std::max(r, sup_distance(fourier_evolve(psi0, c, 200, walk_grid(1, 200)),
                                     evolve(psi0, c, 200)));
      }
      return r;
    });
    add("discrete.norm", 1e-10, [&] {
      double r = 0.0;
      WaveFunction psi = WaveFunction::localized(0, 1, 0);
      for (int n = 0; n < 1000; ++n) {
        psi = step(psi, coins_[1]);
        r = std::max(r, std::abs(std::sqrt(psi.norm_squared()) - 1.0));
      }
      return r;
    });
  }

  void spectral() {
    const AxisVariant variant = cos_h2_ ? AxisVariant::printed_cosine : AxisVariant::sine;
    const MomentumGrid grid(1024);
    add("spectral.h_unit", 1e-12, [&] {
      double r = 0.0;
      for (const Coin& c : coins_) {
        for (double k : grid.nodes()) {
          r = std::max(r, std::abs(pauli_axis(k - c.theta1(), c, variant).norm() - 1.0));
        }
      }
      return r;
    });
    add("spectral.exp_generator", 1e-11, [&] {
      double r = 0.0;
      for (const Coin& c : coins_) {
        for (double k : grid.nodes()) {
          Generator g = hamiltonian(k, c);
          g.axis = pauli_axis(k - c.theta1(), c, variant);
          r = std::max(r, max_abs(exp_i_generator(g, 1.0) - u_of_k(k, c)));
        }
      }
      return r;
    });
    add("spectral.eigen_relation", 1e-12, [&] {
      double r = 0.0;
      for (const Coin& c : coins_) {
        for (double k : grid.nodes()) {
          const SpectralData d = eigensystem(k, c);
          const Mat2 u = u_of_k(k, c);
          r = std::max({r, (u * d.s_unitary.col(0) - d.lambda_plus * d.s_unitary.col(0)).norm(),
                        (u * d.s_unitary.col(1) - d.lambda_minus * d.s_unitary.col(1)).norm()});
        }
      }
      return r;
    });
    add("spectral.norm_bound", 0.0, [&] {
      double r = 0.0;
      for (const Coin& c : coins_) {
        const double bound = kPi - std::acos(c.abs_l1());
        for (double k : grid.nodes()) r = std::max(r, gamma(k - c.theta1(), c) - bound);
      }
      return std::max(r, 0.0);
    });
    add("spectral.s_inverse", 1e-10, [&] {
      double r = 0.0;
      for (const Coin& c : coins_) {
        const double a = c.abs_l1();
        for (double y : {-0.5 * a, 0.0, 0.5 * a, 0.9 * a}) {
          const StationaryPoints sp = stationary_points(y, c);
          const StationaryInverses inv = s_inverse_closed_form(y, c);
          r = std::max({r, max_abs(inv.at_c1 - appendix_s(sp.c1, c).inverse()),
                        max_abs(inv.at_c2 - appendix_s(sp.c2, c).inverse()),
                        max_abs(inv.at_minus_c1 - appendix_s(-sp.c1, c).inverse()),
                        max_abs(inv.at_minus_c2 - appendix_s(-sp.c2, c).inverse())});
        }
      }
      return r;
    });
  }

  void continuous() {
    add("continuous.integer_time", 1e-9, [&] {
      double r = 0.0;
      const std::vector<WaveFunction::Site> sites{{-10, kSqrtHalf, 0}, {10, 0, kSqrtHalf}};
      const WaveFunction psi0 = WaveFunction::from_sites(sites);
      for (long n : {1L, 10L, 100L}) {
        const MomentumGrid grid =
            walk_grid(psi0.width(), static_cast<std::size_t>(n), kContinuousPadding);
        r = std::max(r, sup_distance(evolve_continuous(psi0, static_cast<double>(n), coins_[0],
                                                       grid),
                                     evolve(psi0, coins_[0], n)));
      }
      return r;
    });
    add("continuous.group_law", 1e-9, [&] {
      double r = 0.0;
      const WaveFunction psi0 = seeded_state(rng_, -1, 3);
      for (const Coin& c : coins_) {
        const WaveFunction two = evolve_continuous(evolve_continuous(psi0, 1.3, c), 2.45, c);
        r = std::max(r, sup_distance(two, evolve_continuous(psi0, 3.75, c)));
      }
      return r;
    });
    add("continuous.schrodinger", 1e-5, [&] {
      const WaveFunction psi0 = WaveFunction::localized(0, 1, 0);
      const MomentumGrid grid = continuous_grid(psi0, 3.0, coins_[0]);
      const std::vector<double> times{2.0 - 1e-3, 2.0, 2.0 + 1e-3};
      return schrodinger_residual(momentum_series(psi0, times, coins_[0], grid), coins_[0],
                                  grid);
    });
  }

  void limit() {
    add("limit.two_routes", 1e-10, [&] {
      double r = 0.0;
      const MomentumFunction f = momentum_function(seeded_state(rng_, -2, 5));
      for (const Coin& c : coins_) {
        const double a = c.abs_l1();
        for (double y : {-0.7 * a, -0.1 * a, 0.0, 0.4 * a, 0.95 * a}) {
          const LmValues u = lm_values(y, c, f);
          const LmValues v = lm_values_definitional(y, c, f);
          for (int j = 0; j < 2; ++j) {
            r = std::max({r, std::abs(u.l_plus[j] - v.l_plus[j]),
                          std::abs(u.l_minus[j] - v.l_minus[j]),
                          std::abs(u.m_plus[j] - v.m_plus[j]),
                          std::abs(u.m_minus[j] - v.m_minus[j])});
          }
        }
      }
      return r;
    });
    add("limit.localized_closed_form", 1e-10, [&] {
      double r = 0.0;
      for (const Coin& c : coins_) {
        const double a = c.abs_l1();
        for (auto [qa, qb] : {std::pair<cplx, cplx>{1, 0}, {0, 1}, {0.6, cplx(0, 0.8)}}) {
          for (int i = 1; i < 40; ++i) {
            const double y = -a + 2 * a * i / 40;
            r = std::max(r, std::abs(density(y, c, localized_momentum_function(qa, qb)) -
                                     density_localized(y, c, qa, qb)));
          }
        }
      }
      return r;
    });
    add("limit.mass", 1e-6, [&] {
      double r = 0.0;
      for (const Coin& c : coins_) {
        r = std::max(r, std::abs(limit_law(c, seeded_state(rng_, -1, 3)).mass() - 1.0));
      }
      return r;
    });
    add("limit.ks_hadamard_n1000", 0.05, [&] {
      const WaveFunction psi0 = WaveFunction::localized(0, 1, 0);
      return ks_distance(empirical_scaled_law(evolve(psi0, coins_[0], 1000), 1000),
                         limit_law(coins_[0], psi0));
    });
    add("limit.point_mass", 1e-12, [&] {
      const Coin ballistic = Coin::from_top_row(std::polar(1.0, 0.4), 0.0);
      const WaveFunction psi0 = seeded_state(rng_, -3, 4);
      const DiscreteLaw sim = empirical_scaled_law(WalkRun{ballistic, psi0, 1000});
      const LimitLaw law = point_mass_law(ballistic, psi0);
      const double radius = static_cast<double>(std::max(-psi0.x_min(), psi0.x_max()));
      // Atoms must sit within radius / n of -1 and +1; the mass of each group
      // must equal the limit weight.
      auto outside = [&](double band) { return band * 1000 > radius + 1e-9; };
      double left = 0.0, right = 0.0, r = 0.0;
      for (const Atom& atom : sim.atoms()) {
        if (outside(std::abs(std::abs(atom.location) - 1.0))) return static_cast<double>(INFINITY);
        (atom.location < 0 ? left : right) += atom.weight;
      }
      r = std::max({r, std::abs(left - law.atoms().atoms()[0].weight),
                    std::abs(right - law.atoms().atoms()[1].weight)});
      const Coin flip = Coin::from_top_row(0.0, 1.0);
      const DiscreteLaw home = empirical_scaled_law(WalkRun{flip, psi0, 1000});
      // A flip coin returns every amplitude home on even steps.
      for (const Atom& atom : home.atoms()) {
        if (outside(std::abs(atom.location))) return static_cast<double>(INFINITY);
      }
      return r;
    });
  }

  void semigroup() {
    const MomentumGrid grid(256);
    add("semigroup.conjugation", 1e-11, [&] {
      double r = 0.0;
      const DirectIntegralObservable obs = random_hermitian_observable(grid, rng_());
      for (const Coin& c : coins_) {
        for (double t : {0.1, 1.0, 7.3}) {
          const DirectIntegralObservable out = heisenberg_evolve(obs, t, c);
          for (std::size_t j = 0; j < grid.size(); ++j) {
            r = std::max(r, max_abs(out.matrix(j) -
                                    conjugate_evolve(grid.node(j), t, obs.matrix(j), c)));
          }
        }
      }
      return r;
    });
    add("semigroup.law", 1e-11, [&] {
      double r = 0.0;
      for (const Coin& c : coins_) {
        for (double k : grid.nodes()) {
          const Mat3 lhs =
              pauli_flow(k, 1.0, c).coefficient_action * pauli_flow(k, 7.3, c).coefficient_action;
          r = std::max(r, (lhs - pauli_flow(k, 8.3, c).coefficient_action).cwiseAbs().maxCoeff());
        }
      }
      return r;
    });
    add("semigroup.cross_spectrum", 1e-11, [&] {
      double r = 0.0;
      for (const Coin& c : coins_) {
        for (double k : grid.nodes()) {
          const Mat3 g = cross_generator(k, c);
          const double gam = gamma(k - c.theta1(), c);
          Eigen::EigenSolver<Mat3> es(g);
          std::vector<double> im;
          for (int i = 0; i < 3; ++i) {
            r = std::max(r, std::abs(es.eigenvalues()(i).real()));
            im.push_back(es.eigenvalues()(i).imag());
          }
          std::sort(im.begin(), im.end());
          r = std::max({r, std::abs(im[0] + 2 * gam), std::abs(im[1]), std::abs(im[2] - 2 * gam)});
        }
      }
      return r;
    });
    add("semigroup.identity", 1e-14, [&] {
      double r = 0.0;
      const auto id = DirectIntegralObservable::constant(grid, Mat2::Identity());
      for (const Coin& c : coins_) {
        const auto out = heisenberg_evolve(id, 3.1, c);
        for (std::size_t j = 0; j < grid.size(); ++j) {
          r = std::max(r, max_abs(out.matrix(j) - Mat2::Identity()));
        }
      }
      return r;
    });
    add("semigroup.positivity", 1e-11, [&] {
      double r = 0.0;
      const DirectIntegralObservable psd = random_psd_observable(grid, rng_());
      for (const Coin& c : coins_) {
        const PositivityReport rep = positivity_check(psd, 2.7, c);
        if (!rep.passed) return static_cast<double>(INFINITY);
        r = std::max(r, rep.max_spectrum_drift);
      }
      return r;
    });
  }

  bool cos_h2_;
  bool half_grid_;
  std::mt19937_64 rng_;
  std::vector<Coin> coins_;
  VerifyReport report_;
};

}  // namespace

bool VerifyReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

const Check* VerifyReport::find(const std::string& name) const {
  for (const Check& c : checks) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

std::string VerifyReport::text() const {
  std::ostringstream os;
  std::size_t ok = 0;
  for (const Check& c : checks) {
    char line[160];
    std::snprintf(line, sizeof line, "%-4s %-32s residual %.3e  tol %.1e", c.passed ? "PASS" : "FAIL",
                  c.name.c_str(), c.residual, c.tolerance);
    os << line;
    if (!c.note.empty()) os << "  (" << c.note << ')';
    os << '\n';
    ok += c.passed ? 1 : 0;
  }
  os << ok << '/' << checks.size() << " checks passed\n";
  return os.str();
}

nlohmann::json VerifyReport::to_json() const {
  nlohmann::json list = nlohmann::json::array();
  for (const Check& c : checks) {
    nlohmann::json item = {{"name", c.name},
                           {"residual", std::isfinite(c.residual) ? nlohmann::json(c.residual)
                                                                  : nlohmann::json(nullptr)},
                           {"tolerance", c.tolerance},
                           {"passed", c.passed}};
    if (!c.note.empty()) item["note"] = c.note;
    list.push_back(item);
  }
  return {{"mode", "verify"}, {"passed", passed()}, {"checks", list}};
}

VerifyReport run_verify(const RunConfig& config) { return Suite(config).run(); }

}  // namespace qwalk::cli

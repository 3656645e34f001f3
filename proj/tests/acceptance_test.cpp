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

// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include <Eigen/Eigenvalues>

#include "qwalk/qwalk.hpp"
#include "test_util.hpp"

namespace qwalk {
namespace {

const double kS = 1.0 / std::sqrt(2.0);

// Pinned from the first oracle run (see README). KS at n = 2000 was 0.0254 for
// (1,0) and (0,1) and 0.0142 for (1/sqrt 2, i/sqrt 2); the superposition gaps at
// n = 1000 were 7.85e-3 (against the mean of fig3.1/3.2) and 2.93e-2 (against fig3.4).
constexpr double kKsThreshold = 0.05;
constexpr double kSuperpositionThreshold = 5e-3;

struct Outcome {
  bool passed = true;
  std::string detail;
};

class Runner {
 public:
  void run(const char* id, const char* title, double budget_s, const std::function<Outcome()>& f) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = f();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool in_time = dt < budget_s;
    const bool ok = o.passed && in_time;
    std::printf("[%s] %s %s: %s (%.2f s, budget %.0f s)\n", ok ? "PASS" : "FAIL", id, title,
                o.detail.c_str(), dt, budget_s);
    std::fflush(stdout);
    failures_ += ok ? 0 : 1;
  }
  int failures() const { return failures_; }

 private:
  int failures_ = 0;
};

std::string fmt(const char* f, double a, double b = 0.0, double c = 0.0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, f, a, b, c);
  return buf;
}

std::vector<Coin> coins_with_hadamard(int random, std::uint64_t seed) {
  std::vector<Coin> coins{Coin::hadamard_switched()};
  for (const Coin& c : testing::random_coins(random, seed)) coins.push_back(c);
  return coins;
}

WaveFunction sites(std::vector<WaveFunction::Site> s) { return WaveFunction::from_sites(s); }

Outcome oracle_equivalence() {
  double worst = 0.0;
  const WaveFunction psi0 = WaveFunction::localized(0, kS, cplx(0, kS));
  for (const Coin& c : coins_with_hadamard(10, 1000)) {
    const MomentumGrid grid = MomentumGrid::for_duration(psi0.width(), 200);
    worst = std::max(worst, testing::sup_distance(fourier_evolve(psi0, c, 200, grid),
                                                  evolve(psi0, c, 200)));
  }
  return {worst < 1e-9, fmt("max sitewise gap %.2e over 11 coins, n = 200 (tol 1e-9)", worst)};
}

Outcome integer_time() {
  const Coin h = Coin::hadamard_switched();
  const WaveFunction psi0 = sites({{-10, kS, 0}, {10, 0, kS}});
  double worst = 0.0;
  for (long n : {1L, 10L, 100L}) {
    worst = std::max(worst, testing::sup_distance(
                                evolve_continuous(psi0, static_cast<double>(n), h),
                                evolve(psi0, h, n)));
  }
  return {worst < 1e-9, fmt("max gap %.2e at t = n in {1, 10, 100} (tol 1e-9)", worst)};
}

Outcome limit_convergence() {
  const Coin h = Coin::hadamard_switched();
  const std::vector<std::pair<cplx, cplx>> qubits{{1, 0}, {0, 1}, {kS, cplx(0, kS)}};
  Outcome o;
  for (const auto& [a, b] : qubits) {
    const WaveFunction psi0 = WaveFunction::localized(0, a, b);
    const LimitLaw law = limit_law(h, psi0);
    WaveFunction psi = psi0;
    long done = 0;
    double prev = INFINITY;
    std::string row = "(";
    for (long n : {250L, 500L, 1000L, 2000L}) {
      psi = evolve(psi, h, n - done);
      done = n;
      const double ks = ks_distance(empirical_scaled_law(psi, n), law);
      if (!(ks < prev)) o.passed = false;
      prev = ks;
      row += fmt("%.4f ", ks);
    }
    if (!(prev < kKsThreshold)) o.passed = false;
    row.back() = ')';
    o.detail += row + " ";
  }
  o.detail += fmt("KS at n = 250/500/1000/2000, decreasing, final < %.2f", kKsThreshold);
  return o;
}

Outcome localized_closed_form() {
  double worst = 0.0;
  std::mt19937_64 rng(2024);
  std::normal_distribution<double> nd;
  for (const Coin& c : coins_with_hadamard(4, 2000)) {
    for (int q = 0; q < 5; ++q) {
      cplx a(nd(rng), nd(rng)), b(nd(rng), nd(rng));
      const double norm = std::sqrt(std::norm(a) + std::norm(b));
      a /= norm;
      b /= norm;
      const MomentumFunction f = localized_momentum_function(a, b);
      const double r = c.abs_l1();
      for (int i = 0; i < 200; ++i) {
        const double y = -r + 2.0 * r * (i + 0.5) / 200.0;
        worst = std::max(worst, std::abs(density(y, c, f) - density_localized(y, c, a, b)));
      }
    }
  }
  return {worst < 1e-10, fmt("max density gap %.2e over 5 coins x 5 qubits x 200 y (tol 1e-10)",
                             worst)};
}

Outcome degenerate_laws() {
  const long n = 1000;
  double weight_gap = 0.0;
  bool located = true;
  const Coin ballistic = Coin::from_top_row(std::polar(1.0, 0.9), 0.0);
  for (const WaveFunction& psi0 :
       {WaveFunction::localized(0, 0.6, cplx(0, 0.8)), testing::random_state(0, 1, 5)}) {
    const DiscreteLaw sim = empirical_scaled_law(WalkRun{ballistic, psi0, n});
    const LimitLaw law = point_mass_law(ballistic, psi0);
    if (sim.atoms().size() != 2 || sim.atoms()[0].location != -1.0 ||
        sim.atoms()[1].location != 1.0) {
      located = false;
      continue;
    }
    for (int i = 0; i < 2; ++i) {
      weight_gap = std::max(weight_gap,
                            std::abs(sim.atoms()[i].weight - law.atoms().atoms()[i].weight));
    }
    double left = 0.0, right = 0.0;
    for (const Spinor& v : psi0.amplitudes()) {
      left += std::norm(v(0));
      right += std::norm(v(1));
    }
    weight_gap = std::max({weight_gap, std::abs(law.atoms().atoms()[0].weight - left),
                           std::abs(law.atoms().atoms()[1].weight - right)});
  }
  const Coin flip = Coin::from_top_row(0.0, cplx(0, 1));
  double outside = 0.0;
  for (long steps : {n, n + 1}) {
    const DiscreteLaw sim =
        empirical_scaled_law(WalkRun{flip, WaveFunction::localized(0, kS, cplx(0, kS)), steps});
    for (const Atom& a : sim.atoms()) {
      if (std::abs(a.location) > 1.0 / static_cast<double>(steps)) outside += a.weight;
    }
  }
  const LimitLaw delta = point_mass_law(flip, WaveFunction::localized(0, 1, 0));
  const bool delta_ok = delta.atoms().atoms().size() == 1 &&
                        delta.atoms().atoms()[0].location == 0.0 &&
                        delta.atoms().atoms()[0].weight == 1.0;
  return {located && weight_gap < 1e-13 && outside == 0.0 && delta_ok,
          fmt("l2 = 0: atoms at +-1, weight gap %.1e; l1 = 0: mass outside |y| <= 1/n = %.1e",
              weight_gap, outside)};
}

Outcome generator_correctness() {
  const MomentumGrid grid(1024);
  double exp_gap = 0.0, norm_gap = 0.0, bound_excess = -INFINITY;
  for (const Coin& c : coins_with_hadamard(9, 3000)) {
    const double bound = kPi - std::acos(c.abs_l1());
    for (double k : grid.nodes()) {
      const Generator g = hamiltonian(k, c);
      exp_gap = std::max(exp_gap, testing::max_abs(exp_i_generator(g, 1.0) - u_of_k(k, c)));
      norm_gap = std::max(norm_gap, std::abs(g.axis.norm() - 1.0));
      Eigen::SelfAdjointEigenSolver<Mat2> es(g.matrix);
      bound_excess = std::max(bound_excess, es.eigenvalues().cwiseAbs().maxCoeff() - bound);
    }
  }
  return {exp_gap < 1e-11 && norm_gap < 1e-12 && bound_excess <= 1e-14,
          fmt("|e^{iH} - U| %.2e (tol 1e-11), ||h|-1| %.2e (tol 1e-12), max ||H|| - bound %.2e",
              exp_gap, norm_gap, bound_excess)};
}

Outcome semigroup() {
  const MomentumGrid grid(256);
  double conj = 0.0, law = 0.0, ident = 0.0, spec = 0.0;
  for (const Coin& c : coins_with_hadamard(4, 4000)) {
    const DirectIntegralObservable obs = random_hermitian_observable(grid, 99);
    const auto id = DirectIntegralObservable::constant(grid, Mat2::Identity());
    for (double t : {0.1, 1.0, 7.3}) {
      const DirectIntegralObservable out = heisenberg_evolve(obs, t, c);
      const DirectIntegralObservable out_id = heisenberg_evolve(id, t, c);
      for (std::size_t j = 0; j < grid.size(); ++j) {
        const double k = grid.node(j);
        const Mat2 u = testing::expi_numeric(hamiltonian(k, c).matrix, t);
        conj = std::max(conj, testing::max_abs(out.matrix(j) - u * obs.matrix(j) * u.adjoint()));
        ident = std::max(ident, testing::max_abs(out_id.matrix(j) - Mat2::Identity()));
      }
    }
    for (double k : grid.nodes()) {
      for (auto [s, t] : {std::pair{0.1, 1.0}, std::pair{1.0, 7.3}}) {
        const Mat3 lhs =
            pauli_flow(k, s, c).coefficient_action * pauli_flow(k, t, c).coefficient_action;
        law = std::max(law,
                       (lhs - pauli_flow(k, s + t, c).coefficient_action).cwiseAbs().maxCoeff());
      }
      const double g = gamma(k - c.theta1(), c);
      Eigen::EigenSolver<Mat3> es(cross_generator(k, c));
      std::vector<double> im;
      for (int i = 0; i < 3; ++i) {
        spec = std::max(spec, std::abs(es.eigenvalues()(i).real()));
        im.push_back(es.eigenvalues()(i).imag());
      }
      std::sort(im.begin(), im.end());
      spec = std::max({spec, std::abs(im[0] + 2 * g), std::abs(im[1]), std::abs(im[2] - 2 * g)});
    }
  }
  Outcome o{conj < 1e-11 && law < 1e-11 && ident == 0.0 && spec < 1e-11, ""};
  o.detail = fmt("flow vs conjugation %.2e, R(s)R(t) - R(s+t) %.2e, ", conj, law) +
             fmt("V_t(I) - I %.1e, cross spectrum %.2e (tol 1e-11)", ident, spec);
  return o;
}

Outcome normalization() {
  double mass_gap = 0.0;
  for (const Coin& c : coins_with_hadamard(4, 5000)) {
    for (const WaveFunction& psi0 :
         {WaveFunction::localized(0, 1, 0), WaveFunction::localized(0, kS, cplx(0, kS)),
          testing::random_state(-3, 7, 8)}) {
      mass_gap = std::max(mass_gap, std::abs(limit_law(c, psi0).mass() - 1.0));
    }
  }
  double norm_gap = 0.0;
  for (const Coin& c : coins_with_hadamard(2, 6000)) {
    WaveFunction psi = WaveFunction::localized(0, kS, cplx(0, kS));
    for (int n = 1; n <= 10000; ++n) {
      psi = step(psi, c);
      norm_gap = std::max(norm_gap, std::abs(std::sqrt(psi.norm_squared()) - 1.0));
    }
  }
  return {mass_gap < 1e-6 && norm_gap < 1e-10,
          fmt("max |mass - 1| %.2e (tol 1e-6), max |norm - 1| up to n = 1e4 %.2e (tol 1e-10)",
              mass_gap, norm_gap)};
}

Outcome superposition() {
  const Coin h = Coin::hadamard_switched();
  const long n = 1000;
  const auto f31 = position_distribution(evolve(sites({{10, 0, 1}}), h, n));
  const auto f32 = position_distribution(evolve(sites({{-10, 1, 0}}), h, n));
  const auto f33 = position_distribution(evolve(sites({{-10, kS, 0}, {10, 0, kS}}), h, n));
  const auto f34 = position_distribution(evolve(WaveFunction::localized(0, kS, kS), h, n));
  double vs_mean = 0.0, vs_origin = 0.0;
  for (long x = -n - 10; x <= n + 10; ++x) {
    vs_mean = std::max(vs_mean, std::abs(f33.at(x) - 0.5 * (f31.at(x) + f32.at(x))));
    vs_origin = std::max(vs_origin, std::abs(f33.at(x) - f34.at(x)));
  }
  return {vs_mean > kSuperpositionThreshold && vs_origin > kSuperpositionThreshold,
          fmt("sup|fig3.3 - mean(fig3.1, fig3.2)| %.3e, sup|fig3.3 - fig3.4| %.3e (threshold %.0e)",
              vs_mean, vs_origin, kSuperpositionThreshold)};
}

}  // namespace
}  // namespace qwalk

int main() {
  using namespace qwalk;
  Runner r;
  r.run("C1", "oracle equivalence (discrete)", 10, oracle_equivalence);
  r.run("C2", "integer-time consistency", 30, integer_time);
  r.run("C3", "limit-law convergence", 120, limit_convergence);
  r.run("C4", "localized closed form", 5, localized_closed_form);
  r.run("C5", "degenerate laws", 5, degenerate_laws);
  r.run("C6", "generator correctness", 2, generator_correctness);
  r.run("C7", "semigroup", 5, semigroup);
  r.run("C8", "normalization", 60, normalization);
  r.run("C9", "superposition", 60, superposition);
  std::printf("%d/9 criteria passed\n", 9 - r.failures());
  return r.failures() == 0 ? 0 : 1;
}

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

#include "qwalk/discrete_walk.hpp"

#include <cmath>
#include <complex>

#include "qwalk/errors.hpp"
#include "qwalk/spectral.hpp"

namespace qwalk {

WaveFunction step(const WaveFunction& psi, const Coin& coin) {
  const auto in = psi.amplitudes();
  const std::size_t w = in.size();
  const cplx l1 = coin.l1(), l2 = coin.l2(), r1 = coin.r1(), r2 = coin.r2();
  std::vector<Spinor> out(w + 2, Spinor::Zero());
  for (std::size_t i = 0; i < w; ++i) {
    const Spinor& v = in[i];
    // input site x moves left to x - 1 (output index i) and right to x + 1 (index i + 2)
    out[i](0) += l1 * v(0) + l2 * v(1);
    out[i + 2](1) += r1 * v(0) + r2 * v(1);
  }
  return WaveFunction(psi.x_min() - 1, std::move(out)).trimmed();
}

WaveFunction evolve(const WaveFunction& psi0, const Coin& coin, long n) {
  WaveFunction psi = psi0;
  for (long s = 0; s < n; ++s) psi = step(psi, coin);
  return psi;
}

WalkResult evolve(const WalkRun& run) {
  WalkResult result{run.psi0, {}};
  if (run.policy == TrajectoryPolicy::every_step) {
    result.trajectory.reserve(static_cast<std::size_t>(run.n) + 1);
    result.trajectory.push_back(run.psi0);
  }
  for (long s = 0; s < run.n; ++s) {
    result.final_state = step(result.final_state, run.coin);
    if (run.policy == TrajectoryPolicy::every_step) {
      result.trajectory.push_back(result.final_state);
    }
  }
  return result;
}

WaveFunction ballistic_evolve(const WaveFunction& psi0, const Coin& coin, long n) {
  const cplx left_phase = std::pow(coin.l1(), n);
  const cplx right_phase = std::pow(coin.r2(), n);
  const std::size_t w = psi0.width();
  const auto nn = static_cast<std::size_t>(n);
  std::vector<Spinor> out(w + 2 * nn, Spinor::Zero());
  const auto in = psi0.amplitudes();
  for (std::size_t i = 0; i < w; ++i) {
    out[i](0) = left_phase * in[i](0);
    out[i + 2 * nn](1) = right_phase * in[i](1);
  }
  return WaveFunction(psi0.x_min() - n, std::move(out)).trimmed();
}

WaveFunction fourier_evolve(const WaveFunction& psi0, const Coin& coin, long n,
                            const MomentumGrid& grid) {
  if (n < 0) throw ValidationError("steps: must be nonnegative");
  if (coin.is_ballistic()) return ballistic_evolve(psi0, coin, n);
  const std::size_t width = psi0.width() + 2 * static_cast<std::size_t>(n);
  if (width > grid.size()) {
    throw AliasingError("grid of size " + std::to_string(grid.size()) + " is too small for " +
                        std::to_string(n) + " steps from a support of width " +
                        std::to_string(psi0.width()) + " (need " + std::to_string(width) + ")");
  }
  MomentumState state = fourier_transform(psi0, grid);
  const double nd = static_cast<double>(n);
  for (std::size_t j = 0; j < grid.size(); ++j) {
    const double q = grid.node(j) - coin.theta1();
    const double g = gamma(q, coin);
    const Mat2 s = unitary_s(q, coin);
    const Spinor c = s.adjoint() * state.values[j];
    state.values[j] = s * Spinor(std::polar(1.0, nd * g) * c(0), std::polar(1.0, -nd * g) * c(1));
  }
  return inverse_fourier(state, psi0.x_min() - n, width).trimmed();
}

DiscreteLaw empirical_scaled_law(const WaveFunction& psi_n, long n) {
  if (n < 1) throw ValidationError("empirical_scaled_law: n must be >= 1");
  std::vector<Atom> atoms;
  atoms.reserve(psi_n.width());
  long x = psi_n.x_min();
  const double nd = static_cast<double>(n);
  for (const auto& v : psi_n.amplitudes()) {
    const double p = v.squaredNorm();
    if (p > 0.0) atoms.push_back({static_cast<double>(x) / nd, p});
    ++x;
  }
  return DiscreteLaw(std::move(atoms));
}

DiscreteLaw empirical_scaled_law(const WalkRun& run) {
  return empirical_scaled_law(evolve(run.psi0, run.coin, run.n), run.n);
}

}  // namespace qwalk

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

#include "qwalk/continuous_walk.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "qwalk/errors.hpp"
#include "qwalk/spectral.hpp"

namespace qwalk {

namespace {

std::size_t light_cone(double t) {
  if (!(t >= 0.0) || !std::isfinite(t)) throw ValidationError("times: must be finite and >= 0");
  return static_cast<std::size_t>(std::ceil(t));
}

}  // namespace

Mat2 propagator(double k, double t, const Coin& coin) {
  return exp_i_generator(generator(k, coin), t);
}

std::size_t continuous_padding(const WaveFunction& psi0, double t, const Coin& coin) {
  const std::size_t cone = light_cone(t);
  // Integer times and flip coins give trigonometric polynomials: exact light cone.
  // Ballistic coins at fractional times have algebraic tails that no finite pad removes.
  if (t == std::floor(t) || !coin.has_density()) return kContinuousPadding;
  for (std::size_t pad = kContinuousPadding;; pad *= 2) {
    const MomentumGrid grid = MomentumGrid::for_duration(psi0.width(), cone, pad);
    if (pad >= kMaxContinuousPadding) return pad;
    const WaveFunction psi = inverse_fourier(evolve_continuous_hat(psi0, t, coin, grid),
                                             psi0.x_min() - static_cast<long>(cone + pad),
                                             psi0.width() + 2 * (cone + pad));
    const std::size_t edge = pad / 2;
    double tail = 0.0;
    const auto amps = psi.amplitudes();
    for (std::size_t i = 0; i < edge; ++i) {
      tail = std::max({tail, amps[i].cwiseAbs().maxCoeff(),
                       amps[amps.size() - 1 - i].cwiseAbs().maxCoeff()});
    }
    if (tail < kContinuousTailTolerance) return pad;
  }
}

MomentumGrid continuous_grid(const WaveFunction& psi0, double t, const Coin& coin) {
  return MomentumGrid::for_duration(psi0.width(), light_cone(t),
                                    continuous_padding(psi0, t, coin));
}

MomentumState evolve_continuous_hat(const WaveFunction& psi0, double t, const Coin& coin,
                                    const MomentumGrid& grid) {
  MomentumState state = fourier_transform(psi0, grid);
  for (std::size_t j = 0; j < grid.size(); ++j) {
    state.values[j] = propagator(grid.node(j), t, coin) * state.values[j];
  }
  return state;
}

WaveFunction evolve_continuous(const WaveFunction& psi0, double t, const Coin& coin,
                               const MomentumGrid& grid) {
  const std::size_t cone = light_cone(t);
  const std::size_t needed = psi0.width() + 2 * cone;
  if (needed > grid.size()) {
    throw AliasingError("grid of size " + std::to_string(grid.size()) +
                        " cannot hold the light cone at t = " + std::to_string(t) + " (need " +
                        std::to_string(needed) + ")");
  }
  const long margin = static_cast<long>((grid.size() - psi0.width()) / 2);
  const MomentumState state = evolve_continuous_hat(psi0, t, coin, grid);
  return inverse_fourier(state, psi0.x_min() - margin, grid.size()).trimmed();
}

WaveFunction evolve_continuous(const WaveFunction& psi0, double t, const Coin& coin) {
  return evolve_continuous(psi0, t, coin, continuous_grid(psi0, t, coin));
}

std::vector<Snapshot> snapshot_series(const WaveFunction& psi0, std::span<const double> times,
                                      const Coin& coin) {
  double t_max = 0.0;
  for (double t : times) t_max = std::max(t_max, t);
  const MomentumGrid grid = continuous_grid(psi0, t_max, coin);
  std::vector<Snapshot> out;
  out.reserve(times.size());
  for (double t : times) out.push_back({t, evolve_continuous(psi0, t, coin, grid)});
  return out;
}

std::vector<MomentumSnapshot> momentum_series(const WaveFunction& psi0,
                                              std::span<const double> times, const Coin& coin,
                                              const MomentumGrid& grid) {
  std::vector<MomentumSnapshot> out;
  out.reserve(times.size());
  for (double t : times) {
    out.push_back({t, evolve_continuous_hat(psi0, t, coin, grid).values});
  }
  return out;
}

double schrodinger_residual(std::span<const MomentumSnapshot> series, const Coin& coin,
                            const MomentumGrid& grid) {
  if (series.size() < 3) {
    throw ValidationError("schrodinger_residual: need at least 3 snapshots");
  }
  const double delta = series[1].t - series[0].t;
  if (!(delta > 0.0)) throw ValidationError("schrodinger_residual: times must increase");
  for (std::size_t i = 1; i < series.size(); ++i) {
    const double d = series[i].t - series[i - 1].t;
    if (std::abs(d - delta) > 1e-9 * std::max(1.0, std::abs(series[i].t))) {
      throw ValidationError("schrodinger_residual: snapshot times must be uniformly spaced");
    }
    if (series[i].values.size() != grid.size()) {
      throw ValidationError("schrodinger_residual: snapshot does not match the grid");
    }
  }
  std::vector<Mat2> h(grid.size());
  for (std::size_t j = 0; j < grid.size(); ++j) h[j] = generator(grid.node(j), coin).matrix;

  double worst = 0.0;
  for (std::size_t i = 1; i + 1 < series.size(); ++i) {
    const double two_delta = series[i + 1].t - series[i - 1].t;
    for (std::size_t j = 0; j < grid.size(); ++j) {
      const Spinor derivative = (series[i + 1].values[j] - series[i - 1].values[j]) / two_delta;
      const Spinor rhs = kI * (h[j] * series[i].values[j]);
      worst = std::max(worst, (derivative - rhs).norm());
    }
  }
  return worst;
}

}  // namespace qwalk

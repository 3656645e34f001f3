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

#include <span>
#include <vector>

#include "qwalk/coin.hpp"
#include "qwalk/momentum_grid.hpp"
#include "qwalk/wavefunction.hpp"

namespace qwalk {

/// Sites kept beyond the ceil(t) light cone; the continuous walk is not strictly
/// confined to it.
inline constexpr std::size_t kContinuousPadding = 8;
inline constexpr std::size_t kMaxContinuousPadding = 4096;
/// Largest amplitude tolerated at the window edge when sizing the grid.
inline constexpr double kContinuousTailTolerance = 1e-13;

/// exp(i t H(k)). For l2 = 0 this is diag(e^{-itq}, e^{itq}) with q = k - theta1 in (-pi, pi].
Mat2 propagator(double k, double t, const Coin& coin);

/// Grid holding psi0 for a run of duration t with kContinuousPadding extra sites per side.
/// Sites added beyond ceil(t) on each side. Starts at kContinuousPadding and doubles
/// until the outer sites fall below kContinuousTailTolerance. Integer times, flip
/// coins and ballistic coins keep the base padding.
std::size_t continuous_padding(const WaveFunction& psi0, double t, const Coin& coin);
MomentumGrid continuous_grid(const WaveFunction& psi0, double t, const Coin& coin);

/// psi_hat_t(k_j) = exp(i t H(k_j)) psi_hat_0(k_j) at every node.
MomentumState evolve_continuous_hat(const WaveFunction& psi0, double t, const Coin& coin,
                                    const MomentumGrid& grid);

/// Position-space state at time t on a window of ceil(t) + kContinuousPadding sites past
/// the initial support (capped at the grid size). Throws AliasingError if the grid cannot
/// hold the ceil(t) light cone.
WaveFunction evolve_continuous(const WaveFunction& psi0, double t, const Coin& coin,
                               const MomentumGrid& grid);
WaveFunction evolve_continuous(const WaveFunction& psi0, double t, const Coin& coin);

struct Snapshot {
  double t = 0.0;
  WaveFunction psi;
};

/// Independent snapshots at each time on the grid sized for the largest time.
std::vector<Snapshot> snapshot_series(const WaveFunction& psi0, std::span<const double> times,
                                      const Coin& coin);

struct MomentumSnapshot {
  double t = 0.0;
  std::vector<Spinor> values;
};

/// Momentum-space snapshots psi_hat_t on a grid, for finite-difference checks.
std::vector<MomentumSnapshot> momentum_series(const WaveFunction& psi0,
                                              std::span<const double> times, const Coin& coin,
                                              const MomentumGrid& grid);

/// max_j || (psi_hat_{t+d} - psi_hat_{t-d}) / (2d) - i H(k_j) psi_hat_t || over the interior
/// snapshots of a uniformly spaced series. Throws ValidationError for fewer than 3
/// snapshots or uneven spacing.
double schrodinger_residual(std::span<const MomentumSnapshot> series, const Coin& coin,
                            const MomentumGrid& grid);

}  // namespace qwalk

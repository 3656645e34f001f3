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

#include <vector>

#include "qwalk/coin.hpp"
#include "qwalk/ks.hpp"
#include "qwalk/momentum_grid.hpp"
#include "qwalk/wavefunction.hpp"

namespace qwalk {

enum class TrajectoryPolicy { final_only, every_step };

struct WalkRun {
  Coin coin;
  WaveFunction psi0;
  long n = 0;
  TrajectoryPolicy policy = TrajectoryPolicy::final_only;
};

struct WalkResult {
  WaveFunction final_state;
  /// psi_0 .. psi_n when the policy stores every step, empty otherwise.
  std::vector<WaveFunction> trajectory;
};

/// psi'(x) = L psi(x + 1) + R psi(x - 1) with L = [[l1, l2], [0, 0]], R = [[0, 0], [r1, r2]].
WaveFunction step(const WaveFunction& psi, const Coin& coin);

/// n applications of step().
WaveFunction evolve(const WaveFunction& psi0, const Coin& coin, long n);
WalkResult evolve(const WalkRun& run);

/// Exact l2 = 0 solution psi_n(x) = (l1^n psi0(1; x + n), r2^n psi0(2; x - n)).
WaveFunction ballistic_evolve(const WaveFunction& psi0, const Coin& coin, long n);

/// Applies U(k)^n = S diag(e^{in gamma}, e^{-in gamma}) S^* at every node and
/// transforms back onto [x_min - n, x_max + n]. Ballistic coins use ballistic_evolve.
/// Throws AliasingError unless grid.size() >= width + 2n.
WaveFunction fourier_evolve(const WaveFunction& psi0, const Coin& coin, long n,
                            const MomentumGrid& grid);

/// Law of X_n / n: atoms at y = x / n weighted by p(x). Requires n >= 1.
DiscreteLaw empirical_scaled_law(const WaveFunction& psi_n, long n);
DiscreteLaw empirical_scaled_law(const WalkRun& run);

}  // namespace qwalk

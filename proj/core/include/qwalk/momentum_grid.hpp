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

#include <cstddef>
#include <vector>

#include "qwalk/linalg.hpp"
#include "qwalk/wavefunction.hpp"

namespace qwalk {

/// Uniform grid k_j = -pi + 2 pi j / M, j = 0..M-1, on the momentum circle.
class MomentumGrid {
 public:
  explicit MomentumGrid(std::size_t m);

  /// Smallest grid that holds a state of `support_width` sites after it spreads
  /// by `duration + padding` sites to each side: M = width + 2 (duration + padding) + 2.
  /// For a support of radius R this is the 2(n + R) + 3 rule.
  static MomentumGrid for_duration(std::size_t support_width, std::size_t duration,
                                   std::size_t padding = 0);

  std::size_t size() const { return m_; }
  double spacing() const { return 2.0 * kPi / static_cast<double>(m_); }
  double node(std::size_t j) const { return -kPi + spacing() * static_cast<double>(j); }
  std::vector<double> nodes() const;

  /// exp(i x k_j), computed from an exact root-of-unity table.
  cplx phase(long x, std::size_t j) const;

 private:
  std::size_t m_;
  std::vector<cplx> roots_;
};

/// Momentum-space amplitudes sampled at the nodes of a grid.
struct MomentumState {
  MomentumGrid grid;
  std::vector<Spinor> values;
};

/// psi_hat(k) = sum_x psi(x) e^{ixk} / sqrt(2 pi), evaluated exactly at one momentum.
Spinor fourier_at(const WaveFunction& psi, double k);

/// psi_hat at every node. Throws AliasingError if the grid is smaller than the support.
MomentumState fourier_transform(const WaveFunction& psi, const MomentumGrid& grid);

/// Quadrature of psi(x) = int e^{-ixk} psi_hat(k) dk / sqrt(2 pi) on the window
/// [x_min, x_min + width - 1]. Exact for band-limited states whose support lies in
/// the window. Throws AliasingError if width exceeds the grid size.
WaveFunction inverse_fourier(const MomentumState& state, long x_min, std::size_t width);

}  // namespace qwalk

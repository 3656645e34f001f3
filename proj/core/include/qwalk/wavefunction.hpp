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

#include "qwalk/linalg.hpp"

namespace qwalk {

/// Fringe amplitudes with squared modulus below this are dropped from supports.
inline constexpr double kTrimThreshold = 1e-30;

/// Finitely supported chirality amplitudes psi(x) = (psi(1;x), psi(2;x)) on the
/// contiguous interval [x_min, x_max]. Sites outside the interval are zero.
class WaveFunction {
 public:
  struct Site {
    long x;
    cplx left;
    cplx right;
  };

  /// Amplitudes for sites x_min, x_min + 1, ...; must be nonempty.
  WaveFunction(long x_min, std::vector<Spinor> amplitudes);

  /// A single qubit (a, b) at site x.
  static WaveFunction localized(long x, cplx a, cplx b);
  /// Builds the smallest interval covering the listed sites; gaps are zero.
  /// Throws ValidationError on an empty list or a repeated site.
  static WaveFunction from_sites(std::span<const Site> sites);

  long x_min() const { return x_min_; }
  long x_max() const { return x_min_ + static_cast<long>(amps_.size()) - 1; }
  std::size_t width() const { return amps_.size(); }

  Spinor at(long x) const;
  std::span<const Spinor> amplitudes() const { return amps_; }
  std::vector<Site> sites() const;

  double norm_squared() const;
  /// Drops leading/trailing sites whose squared norm is below `threshold`.
  /// At least one site is always kept.
  WaveFunction trimmed(double threshold = kTrimThreshold) const;

 private:
  long x_min_;
  std::vector<Spinor> amps_;
};

/// p(x) = |psi(1;x)|^2 + |psi(2;x)|^2 over the support of a wavefunction.
struct PositionDistribution {
  long x_min = 0;
  std::vector<double> p;

  long x_max() const { return x_min + static_cast<long>(p.size()) - 1; }
  double at(long x) const;
  double total() const;
};

PositionDistribution position_distribution(const WaveFunction& psi);

}  // namespace qwalk

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

#include "qwalk/momentum_grid.hpp"

#include <cmath>
#include <string>

#include "qwalk/errors.hpp"

namespace qwalk {

namespace {

const double kInvSqrt2Pi = 1.0 / std::sqrt(2.0 * kPi);

std::size_t mod(long a, std::size_t m) {
  const long mm = static_cast<long>(m);
  long r = a % mm;
  if (r < 0) r += mm;
  return static_cast<std::size_t>(r);
}

}  // namespace

MomentumGrid::MomentumGrid(std::size_t m) : m_(m) {
  if (m == 0) throw ValidationError("grid: size must be positive");
  roots_.reserve(m);
  for (std::size_t r = 0; r < m; ++r) {
    roots_.push_back(std::polar(1.0, 2.0 * kPi * static_cast<double>(r) / static_cast<double>(m)));
  }
}

MomentumGrid MomentumGrid::for_duration(std::size_t support_width, std::size_t duration,
                                        std::size_t padding) {
  return MomentumGrid(support_width + 2 * (duration + padding) + 2);
}

std::vector<double> MomentumGrid::nodes() const {
  std::vector<double> k(m_);
  for (std::size_t j = 0; j < m_; ++j) k[j] = node(j);
  return k;
}

cplx MomentumGrid::phase(long x, std::size_t j) const {
  // x k_j = -pi x + 2 pi x j / M
  const cplx root = roots_[mod(x, m_) * j % m_];
  return (x % 2 == 0) ? root : -root;
}

Spinor fourier_at(const WaveFunction& psi, double k) {
  Spinor acc = Spinor::Zero();
  long x = psi.x_min();
  for (const auto& v : psi.amplitudes()) {
    acc += std::polar(1.0, static_cast<double>(x) * k) * v;
    ++x;
  }
  return acc * kInvSqrt2Pi;
}

MomentumState fourier_transform(const WaveFunction& psi, const MomentumGrid& grid) {
  const std::size_t m = grid.size();
  if (psi.width() > m) {
    throw AliasingError("grid of size " + std::to_string(m) + " cannot hold a support of width " +
                        std::to_string(psi.width()));
  }
  std::vector<Spinor> values(m, Spinor::Zero());
  const auto amps = psi.amplitudes();
  for (std::size_t j = 0; j < m; ++j) {
    Spinor acc = Spinor::Zero();
    for (std::size_t i = 0; i < amps.size(); ++i) {
      if (amps[i].squaredNorm() == 0.0) continue;
      acc += grid.phase(psi.x_min() + static_cast<long>(i), j) * amps[i];
    }
    values[j] = acc * kInvSqrt2Pi;
  }
  return {grid, std::move(values)};
}

WaveFunction inverse_fourier(const MomentumState& state, long x_min, std::size_t width) {
  const std::size_t m = state.grid.size();
  if (width > m) {
    throw AliasingError("grid of size " + std::to_string(m) + " cannot resolve a window of width " +
                        std::to_string(width));
  }
  const double weight = state.grid.spacing() * kInvSqrt2Pi;
  std::vector<Spinor> amps(width, Spinor::Zero());
  for (std::size_t i = 0; i < width; ++i) {
    const long x = x_min + static_cast<long>(i);
    Spinor acc = Spinor::Zero();
    for (std::size_t j = 0; j < m; ++j) acc += std::conj(state.grid.phase(x, j)) * state.values[j];
    amps[i] = acc * weight;
  }
  return WaveFunction(x_min, std::move(amps));
}

}  // namespace qwalk

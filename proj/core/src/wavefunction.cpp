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

#include "qwalk/wavefunction.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "qwalk/errors.hpp"

namespace qwalk {

WaveFunction::WaveFunction(long x_min, std::vector<Spinor> amplitudes)
    : x_min_(x_min), amps_(std::move(amplitudes)) {
  if (amps_.empty()) throw ValidationError("wavefunction needs at least one site");
}

WaveFunction WaveFunction::localized(long x, cplx a, cplx b) {
  return WaveFunction(x, {Spinor(a, b)});
}

WaveFunction WaveFunction::from_sites(std::span<const Site> sites) {
  if (sites.empty()) throw ValidationError("sites: list is empty");
  auto [lo, hi] = std::minmax_element(sites.begin(), sites.end(),
                                      [](const Site& a, const Site& b) { return a.x < b.x; });
  const long x_min = lo->x;
  std::vector<Spinor> amps(static_cast<std::size_t>(hi->x - x_min + 1), Spinor::Zero());
  std::vector<bool> seen(amps.size(), false);
  for (const auto& s : sites) {
    const auto i = static_cast<std::size_t>(s.x - x_min);
    if (seen[i]) throw ValidationError("sites: site " + std::to_string(s.x) + " listed twice");
    seen[i] = true;
    amps[i] = Spinor(s.left, s.right);
  }
  return WaveFunction(x_min, std::move(amps));
}

Spinor WaveFunction::at(long x) const {
  if (x < x_min_ || x > x_max()) return Spinor::Zero();
  return amps_[static_cast<std::size_t>(x - x_min_)];
}

std::vector<WaveFunction::Site> WaveFunction::sites() const {
  std::vector<Site> out;
  out.reserve(amps_.size());
  for (std::size_t i = 0; i < amps_.size(); ++i) {
    out.push_back({x_min_ + static_cast<long>(i), amps_[i](0), amps_[i](1)});
  }
  return out;
}

double WaveFunction::norm_squared() const {
  return std::accumulate(amps_.begin(), amps_.end(), 0.0,
                         [](double acc, const Spinor& v) { return acc + v.squaredNorm(); });
}

WaveFunction WaveFunction::trimmed(double threshold) const {
  std::size_t first = 0;
  std::size_t last = amps_.size() - 1;
  while (first < last && amps_[first].squaredNorm() < threshold) ++first;
  while (last > first && amps_[last].squaredNorm() < threshold) --last;
  if (first == 0 && last == amps_.size() - 1) return *this;
  return WaveFunction(x_min_ + static_cast<long>(first),
                      std::vector<Spinor>(amps_.begin() + static_cast<long>(first),
                                          amps_.begin() + static_cast<long>(last) + 1));
}

double PositionDistribution::at(long x) const {
  if (x < x_min || x > x_max()) return 0.0;
  return p[static_cast<std::size_t>(x - x_min)];
}

double PositionDistribution::total() const { return std::accumulate(p.begin(), p.end(), 0.0); }

PositionDistribution position_distribution(const WaveFunction& psi) {
  PositionDistribution d;
  d.x_min = psi.x_min();
  d.p.reserve(psi.width());
  for (const auto& v : psi.amplitudes()) d.p.push_back(v.squaredNorm());
  return d;
}

}  // namespace qwalk

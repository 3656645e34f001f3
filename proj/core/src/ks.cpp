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

#include "qwalk/ks.hpp"

#include <algorithm>
#include <cmath>

#include "qwalk/errors.hpp"

namespace qwalk {

DiscreteLaw::DiscreteLaw(std::vector<Atom> atoms) {
  std::sort(atoms.begin(), atoms.end(),
            [](const Atom& a, const Atom& b) { return a.location < b.location; });
  for (const auto& at : atoms) {
    if (!atoms_.empty() && atoms_.back().location == at.location) {
      atoms_.back().weight += at.weight;
    } else {
      atoms_.push_back(at);
    }
  }
}

double DiscreteLaw::total_weight() const {
  double s = 0.0;
  for (const auto& a : atoms_) s += a.weight;
  return s;
}

double DiscreteLaw::mean() const {
  double s = 0.0;
  for (const auto& a : atoms_) s += a.weight * a.location;
  return s;
}

double DiscreteLaw::second_moment() const {
  double s = 0.0;
  for (const auto& a : atoms_) s += a.weight * a.location * a.location;
  return s;
}

double DiscreteLaw::cdf(double y) const {
  double s = 0.0;
  for (const auto& a : atoms_) {
    if (a.location > y) break;
    s += a.weight;
  }
  return s;
}

double ks_distance(const DiscreteLaw& a, const DiscreteLaw& b) {
  const auto& xa = a.atoms();
  const auto& xb = b.atoms();
  std::size_t i = 0;
  std::size_t j = 0;
  double fa = 0.0;
  double fb = 0.0;
  double sup = 0.0;
  while (i < xa.size() || j < xb.size()) {
    double y;
    if (j == xb.size() || (i < xa.size() && xa[i].location <= xb[j].location)) {
      y = xa[i].location;
    } else {
      y = xb[j].location;
    }
    while (i < xa.size() && xa[i].location == y) fa += xa[i++].weight;
    while (j < xb.size() && xb[j].location == y) fb += xb[j++].weight;
    sup = std::max(sup, std::abs(fa - fb));
  }
  return sup;
}

double ks_distance_to_continuous(const DiscreteLaw& a, std::span<const double> cdf_at_atoms) {
  const auto& xs = a.atoms();
  if (cdf_at_atoms.size() != xs.size()) {
    throw ValidationError("ks_distance: one CDF value per atom required");
  }
  double below = 0.0;
  double sup = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double above = below + xs[i].weight;
    sup = std::max({sup, std::abs(below - cdf_at_atoms[i]), std::abs(above - cdf_at_atoms[i])});
    below = above;
  }
  return sup;
}

}  // namespace qwalk

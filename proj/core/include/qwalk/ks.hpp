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

namespace qwalk {

struct Atom {
  double location = 0.0;
  double weight = 0.0;
};

/// A finitely supported law on the real line. Atoms are kept sorted by location
/// with duplicates merged.
class DiscreteLaw {
 public:
  DiscreteLaw() = default;
  explicit DiscreteLaw(std::vector<Atom> atoms);

  const std::vector<Atom>& atoms() const { return atoms_; }
  double total_weight() const;
  double mean() const;
  double second_moment() const;
  /// P(X <= y).
  double cdf(double y) const;

 private:
  std::vector<Atom> atoms_;
};

/// sup_y |F_a(y) - F_b(y)| between two discrete laws, over the merged support.
double ks_distance(const DiscreteLaw& a, const DiscreteLaw& b);

/// sup_y |F_a(y) - F(y)| for a continuous CDF F given by its values at the atoms of `a`.
/// Both one-sided limits of the step function at every atom are compared.
double ks_distance_to_continuous(const DiscreteLaw& a, std::span<const double> cdf_at_atoms);

}  // namespace qwalk

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

#include "qwalk/linalg.hpp"

namespace qwalk {

/// Tolerance for accepting a raw matrix as unitary.
inline constexpr double kUnitarityTolerance = 1e-8;
/// Below this modulus l1 or l2 is treated as exactly zero.
inline constexpr double kDegeneracyThreshold = 1e-8;

/// The chirality rotation U = [[l1, l2], [r1, r2]], phase-normalized so det U = 1.
///
/// Multiplying a coin by a global phase leaves every position distribution
/// unchanged, so every raw unitary is mapped to its det = 1 representative on
/// construction. Under det = 1 the bottom row is (-conj(l2), conj(l1)).
class Coin {
 public:
  /// Validates unitarity and rescales by exp(-i arg(det U) / 2), arg in (-pi, pi].
  /// Throws ValidationError naming the violated row relation.
  static Coin normalize_phase(const Mat2& u);

  /// (1/sqrt 2) [[1, -1], [1, 1]]: Hadamard with its rows exchanged so det = 1.
  static Coin hadamard_switched();
  /// Coin from the top row; the bottom row is filled in as (-conj(l2), conj(l1)).
  static Coin from_top_row(cplx l1, cplx l2);

  const Mat2& matrix() const { return m_; }
  cplx l1() const { return m_(0, 0); }
  cplx l2() const { return m_(0, 1); }
  cplx r1() const { return m_(1, 0); }
  cplx r2() const { return m_(1, 1); }
  double abs_l1() const { return std::abs(l1()); }
  double abs_l2() const { return std::abs(l2()); }

  /// Principal argument of l1; 0 by convention when l1 = 0 (see theta1_degenerate).
  double theta1() const { return theta1_; }
  /// Principal argument of l2; 0 by convention when l2 = 0.
  double theta2() const { return theta2_; }
  bool theta1_degenerate() const { return abs_l1() == 0.0; }

  /// l2 = 0 up to kDegeneracyThreshold: the walk moves ballistically.
  bool is_ballistic() const { return abs_l2() < kDegeneracyThreshold; }
  /// l1 = 0 up to kDegeneracyThreshold: the walk oscillates in place.
  bool is_flip() const { return abs_l1() < kDegeneracyThreshold; }
  /// l1 l2 r1 r2 != 0, the case with a limit density.
  bool has_density() const { return !is_ballistic() && !is_flip(); }

 private:
  explicit Coin(const Mat2& m);

  Mat2 m_;
  double theta1_ = 0.0;
  double theta2_ = 0.0;
};

}  // namespace qwalk

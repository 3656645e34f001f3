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

#include <cstdint>
#include <vector>

#include <Eigen/Core>

#include "qwalk/coin.hpp"
#include "qwalk/momentum_grid.hpp"
#include "qwalk/pauli.hpp"

namespace qwalk {

/// A momentum-indexed family A(k) of 2x2 operators, one per grid node.
struct DirectIntegralObservable {
  MomentumGrid grid;
  std::vector<PauliObservable> values;

  static DirectIntegralObservable constant(const MomentumGrid& grid, const Mat2& a);
  Mat2 matrix(std::size_t j) const { return pauli_compose(values[j]); }
  /// max_j ||A(k_j)|| (operator norm).
  double sup_norm() const;
  bool is_hermitian(double tol = 1e-12) const;
};

/// V_{k,t}(A) = exp(itH(k)) A exp(-itH(k)).
Mat2 conjugate_evolve(double k, double t, const Mat2& a, const Coin& coin);

/// G(k) = 2 gamma [h]_x, the antisymmetric generator of the Pauli-basis flow:
/// d/dt (V(sigma_1), V(sigma_2), V(sigma_3))^T = G (V(sigma_1), V(sigma_2), V(sigma_3))^T.
/// Spectrum {0, +-2 gamma i}, kernel spanned by h.
Mat3 cross_generator(double k, const Coin& coin);

enum class FlowRoute { rodrigues, eigenbasis };

struct PauliFlow {
  double k = 0.0;
  double t = 0.0;
  double gamma = 0.0;
  Vec3 axis = Vec3::UnitZ();
  Mat3 generator = Mat3::Zero();
  /// Columns: h, (e1 - i e2)/sqrt 2, (e1 + i e2)/sqrt 2 for eigenvalues 0, 2 gamma i, -2 gamma i.
  Eigen::Matrix3cd w = Eigen::Matrix3cd::Identity();
  /// exp(t G): maps (sigma_1, sigma_2, sigma_3)^T to (V(sigma_1), V(sigma_2), V(sigma_3))^T.
  Mat3 basis_action = Mat3::Identity();
  /// exp(-t G) = basis_action^T: maps coefficients a(0) to a(t).
  Mat3 coefficient_action = Mat3::Identity();
};

/// Rotation by `angle` about the unit vector `axis`.
Mat3 rodrigues_rotation(const Vec3& axis, double angle);
/// Unitary eigenbasis W of cross_matrix(axis), ordered as in PauliFlow::w.
Eigen::Matrix3cd cross_eigenbasis(const Vec3& axis);

PauliFlow pauli_flow(double k, double t, const Coin& coin, FlowRoute route = FlowRoute::rodrigues);

/// Nodewise Pauli-coefficient evolution; a_0 is untouched.
DirectIntegralObservable heisenberg_evolve(const DirectIntegralObservable& obs, double t,
                                           const Coin& coin);

struct PositivityReport {
  std::vector<double> min_eigenvalue_before;
  std::vector<double> min_eigenvalue_after;
  /// Largest change of either eigenvalue of any node.
  double max_spectrum_drift = 0.0;
  bool passed = false;
};

/// Evolves a Hermitian observable and compares spectra node by node. Nodes that are
/// PSD (min eigenvalue >= -1e-12) must stay PSD (>= -1e-10).
/// Throws ValidationError for non-Hermitian input.
PositivityReport positivity_check(const DirectIntegralObservable& obs, double t, const Coin& coin);

/// Seeded random Hermitian observable with normally distributed Pauli coefficients.
DirectIntegralObservable random_hermitian_observable(const MomentumGrid& grid, std::uint64_t seed);
/// Seeded random PSD observable: a_0 >= |(a_1, a_2, a_3)| at every node.
DirectIntegralObservable random_psd_observable(const MomentumGrid& grid, std::uint64_t seed);

}  // namespace qwalk

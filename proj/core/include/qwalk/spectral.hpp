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

#include "qwalk/coin.hpp"
#include "qwalk/linalg.hpp"

namespace qwalk {

/// Dispersion gamma(k) = arccos(|l1| cos k), principal branch in [0, pi].
/// Even and 2 pi-periodic in k; ranges over [arccos|l1|, pi - arccos|l1|].
double gamma(double k, double abs_l1);
double gamma(double k, const Coin& coin);

/// One-step unitary in momentum space, [[e^{-ik} l1, e^{-ik} l2], [e^{ik} r1, e^{ik} r2]].
Mat2 u_of_k(double k, const Coin& coin);

/// Eigenvector matrix with unnormalized columns e_+(q), e_-(q), where q = k - theta1
/// is the shifted momentum. S(q) diag(e^{i gamma(q)}, e^{-i gamma(q)}) S(q)^{-1} = U(k).
/// Throws DegenerateCoinError for ballistic coins.
Mat2 appendix_s(double q, const Coin& coin);

/// Unitary eigenvector matrix at shifted momentum q built from
/// alpha_pm(q) = i e^{i(q + theta1 - theta2)} (rho sin q +- sqrt(1 + rho^2 sin^2 q)),
/// rho = |l1| / |l2|. Column 1 pairs with lambda_+ = e^{+i gamma(q)}.
Mat2 unitary_s(double q, const Coin& coin);

struct SpectralData {
  double k = 0.0;
  double gamma = 0.0;  // gamma(k - theta1)
  cplx lambda_plus;
  cplx lambda_minus;
  Mat2 s_appendix;
  Mat2 s_unitary;
  Mat2 hamiltonian;
  Vec3 h;
};

/// Full per-momentum package. Throws DegenerateCoinError for ballistic coins.
SpectralData eigensystem(double k, const Coin& coin);

/// Which denominator to use for h_2. The printed form uses cos q where h_1 and h_3
/// use sin q; only the sine form gives a unit vector. The printed form exists so the
/// verification suite can show that it fails.
enum class AxisVariant { sine, printed_cosine };

/// Unit Pauli vector h(q) with H(k) = gamma(q) h(q) . sigma at q = k - theta1.
Vec3 pauli_axis(double q, const Coin& coin, AxisVariant variant = AxisVariant::sine);

/// The generator H(k) = gamma (h . sigma), with U(k) = exp(i H(k)).
struct Generator {
  double k = 0.0;
  double gamma = 0.0;
  Vec3 axis = Vec3::UnitZ();
  Mat2 matrix = Mat2::Zero();
};

/// Pauli-form generator for l2 != 0. Throws DegenerateCoinError otherwise.
Generator hamiltonian(double k, const Coin& coin);
/// For l2 = 0, U(k) = diag(e^{-iq}, e^{iq}) and H(k) = -q sigma_3 with q = k - theta1
/// wrapped to (-pi, pi].
Generator ballistic_hamiltonian(double k, const Coin& coin);
/// hamiltonian() or ballistic_hamiltonian() depending on the coin.
Generator generator(double k, const Coin& coin);

/// H(k) = S diag(gamma, -gamma) S^* with the unitary S, the cross-check for the Pauli form.
Mat2 hamiltonian_spectral_form(double k, const Coin& coin);

/// exp(i t H) = cos(t gamma) I + i sin(t gamma) (h . sigma).
Mat2 exp_i_generator(const Generator& g, double t);

/// Closed-form S(+-c_j(y))^{-1} at the stationary points of gamma(k) - y k.
struct StationaryInverses {
  Mat2 at_c1;
  Mat2 at_c2;
  Mat2 at_minus_c1;
  Mat2 at_minus_c2;
};

/// Throws DegenerateCoinError if l2 = 0 and DomainError if |y| >= |l1|.
StationaryInverses s_inverse_closed_form(double y, const Coin& coin);

}  // namespace qwalk

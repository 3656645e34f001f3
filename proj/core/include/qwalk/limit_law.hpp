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

#include <array>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "qwalk/coin.hpp"
#include "qwalk/ks.hpp"
#include "qwalk/linalg.hpp"
#include "qwalk/stationary.hpp"
#include "qwalk/wavefunction.hpp"

namespace qwalk {

/// Initial state in momentum space, evaluated at arbitrary k.
using MomentumFunction = std::function<Spinor(double)>;

/// Exact finite Fourier sum of a finitely supported state (no grid).
MomentumFunction momentum_function(const WaveFunction& psi0);
/// The constant (a, b) / sqrt(2 pi) of a qubit localized at the origin.
MomentumFunction localized_momentum_function(cplx a, cplx b);

/// Eigen-projection amplitudes at the stationary points:
/// l_+(c_j), m_+(c_j) on the lambda_+ branch and l_-(-c_j), m_-(-c_j) on the
/// lambda_- branch, j = 1, 2 (array index 0, 1).
struct LmValues {
  std::array<cplx, 2> l_plus{};
  std::array<cplx, 2> l_minus{};
  std::array<cplx, 2> m_plus{};
  std::array<cplx, 2> m_minus{};

  /// Sum of the eight squared moduli.
  double square_sum() const;
};

/// Closed-form values. On the lambda_- branch the imaginary part of
/// y +- i sqrt((|l1|^2 - y^2) / (1 - |l1|^2)) carries the opposite sign to the
/// lambda_+ branch at the same c_j.
/// Throws DegenerateCoinError / DomainError outside l1 l2 != 0, |y| < |l1|.
LmValues lm_values(double y, const Coin& coin, const MomentumFunction& psi_hat);

/// The same values from their definition, u_pm(k) <e_pm, S(k)^{-1} psi_hat(k + theta1)>,
/// with S inverted numerically.
LmValues lm_values_definitional(double y, const Coin& coin, const MomentumFunction& psi_hat);

/// Initial-condition factor of the limit density, g(y) = pi * LmValues::square_sum().
/// The factor pi makes g(y) = 1 - beta y for a qubit localized at the origin.
double g_function(double y, const Coin& coin, const MomentumFunction& psi_hat);

/// Universal part sqrt(1 - |l1|^2) / (pi (1 - y^2) sqrt(|l1|^2 - y^2)).
/// +infinity at |y| = |l1|, 0 outside.
double density_prefactor(double y, double abs_l1);

/// Limit density rho(y) = prefactor(y) g(y) on (-|l1|, |l1|); 0 outside.
/// Returns +infinity at the endpoints y = +-|l1| (integrable singularity).
double density(double y, const Coin& coin, const MomentumFunction& psi_hat);

/// beta = |a|^2 - |b|^2 + (conj(l1) l2 conj(a) b + l1 conj(l2) a conj(b)) / |l1|^2.
double localized_beta(const Coin& coin, cplx a, cplx b);

/// Closed-form density for a qubit (a, b) at the origin, prefactor(y) (1 - beta y).
/// Throws ValidationError if |a|^2 + |b|^2 != 1.
double density_localized(double y, const Coin& coin, cplx a, cplx b);

enum class LawKind { density, point_mass };

/// Weak limit of X_n / n: either a density on (-|l1|, |l1|) or a discrete law.
class LimitLaw {
 public:
  static LimitLaw from_density(const Coin& coin, MomentumFunction psi_hat,
                               std::optional<double> beta = std::nullopt);
  static LimitLaw from_atoms(DiscreteLaw atoms);

  LawKind kind() const { return kind_; }
  /// The support is contained in [-support_radius, support_radius].
  double support_radius() const;
  std::optional<double> beta() const { return beta_; }
  const DiscreteLaw& atoms() const { return atoms_; }

  /// Density value (density kind only).
  double pdf(double y) const;
  double cdf(double y) const;
  /// CDF at ascending points, integrating piecewise between consecutive points.
  std::vector<double> cdf(std::span<const double> ascending) const;

  double mass() const;
  double mean() const;
  double second_moment() const;

 private:
  LimitLaw() = default;
  /// Integrand after y = |l1| sin u: smooth on [-pi/2, pi/2].
  double integrand(double u) const;
  double integrate(double u0, double u1, int power) const;

  LawKind kind_ = LawKind::point_mass;
  std::optional<Coin> coin_;
  MomentumFunction psi_hat_;
  std::optional<double> beta_;
  DiscreteLaw atoms_;
};

/// Point-mass limits: l2 = 0 gives atoms at -1 and +1 weighted by the left and
/// right chirality masses; l1 = 0 gives delta_0. Throws ValidationError for coins
/// with l1 l2 != 0.
LimitLaw point_mass_law(const Coin& coin, const WaveFunction& psi0);

/// Point-mass law for degenerate coins, density law otherwise. Initial states that
/// are a single qubit at the origin carry beta.
LimitLaw limit_law(const Coin& coin, const WaveFunction& psi0);

/// KS distance between a discrete law and a limit law.
double ks_distance(const DiscreteLaw& law, const LimitLaw& limit);

}  // namespace qwalk

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

#include "qwalk/semigroup.hpp"

#include <cmath>
#include <random>

#include <Eigen/SVD>

#include "qwalk/errors.hpp"
#include "qwalk/spectral.hpp"

namespace qwalk {

namespace {

// Eigenvalues of a Hermitian a_0 + a . sigma are a_0 -+ |a|.
std::pair<double, double> hermitian_spectrum(const PauliObservable& p) {
  const double r = std::sqrt(p[1].real() * p[1].real() + p[2].real() * p[2].real() +
                             p[3].real() * p[3].real());
  return {p[0].real() - r, p[0].real() + r};
}

}  // namespace

DirectIntegralObservable DirectIntegralObservable::constant(const MomentumGrid& grid,
                                                            const Mat2& a) {
  return {grid, std::vector<PauliObservable>(grid.size(), pauli_decompose(a))};
}

double DirectIntegralObservable::sup_norm() const {
  double s = 0.0;
  for (std::size_t j = 0; j < values.size(); ++j) {
    Eigen::JacobiSVD<Mat2> svd(matrix(j));
    s = std::max(s, svd.singularValues()(0));
  }
  return s;
}

bool DirectIntegralObservable::is_hermitian(double tol) const {
  for (const auto& v : values) {
    if (!v.is_hermitian(tol)) return false;
  }
  return true;
}

Mat2 conjugate_evolve(double k, double t, const Mat2& a, const Coin& coin) {
  const Mat2 u = exp_i_generator(generator(k, coin), t);
  return u * a * u.adjoint();
}

Mat3 cross_generator(double k, const Coin& coin) {
  const Generator g = generator(k, coin);
  return cross_matrix(2.0 * g.gamma * g.axis);
}

Mat3 rodrigues_rotation(const Vec3& axis, double angle) {
  const Mat3 k = cross_matrix(axis);
  return Mat3::Identity() + std::sin(angle) * k + (1.0 - std::cos(angle)) * (k * k);
}

Eigen::Matrix3cd cross_eigenbasis(const Vec3& axis) {
  Eigen::Index smallest;
  axis.cwiseAbs().minCoeff(&smallest);
  const Vec3 e1 = axis.cross(Vec3::Unit(smallest)).normalized();
  const Vec3 e2 = axis.cross(e1);
  const double s = 1.0 / std::sqrt(2.0);
  Eigen::Matrix3cd w;
  w.col(0) = axis.cast<cplx>();
  w.col(1) = s * (e1.cast<cplx>() - kI * e2.cast<cplx>());
  w.col(2) = s * (e1.cast<cplx>() + kI * e2.cast<cplx>());
  return w;
}

PauliFlow pauli_flow(double k, double t, const Coin& coin, FlowRoute route) {
  const Generator g = generator(k, coin);
  PauliFlow f;
  f.k = k;
  f.t = t;
  f.gamma = g.gamma;
  f.axis = g.axis;
  f.generator = cross_matrix(2.0 * g.gamma * g.axis);
  f.w = cross_eigenbasis(g.axis);
  const double angle = 2.0 * g.gamma * t;
  if (route == FlowRoute::rodrigues) {
    f.basis_action = rodrigues_rotation(g.axis, angle);
  } else {
    const Eigen::Vector3cd phases(1.0, std::polar(1.0, angle), std::polar(1.0, -angle));
    f.basis_action = (f.w * phases.asDiagonal() * f.w.adjoint()).real();
  }
  f.coefficient_action = f.basis_action.transpose();
  return f;
}

DirectIntegralObservable heisenberg_evolve(const DirectIntegralObservable& obs, double t,
                                           const Coin& coin) {
  DirectIntegralObservable out = obs;
  for (std::size_t j = 0; j < obs.grid.size(); ++j) {
    const Mat3 r = pauli_flow(obs.grid.node(j), t, coin).coefficient_action;
    const auto& in = obs.values[j];
    for (int l = 1; l <= 3; ++l) {
      out.values[j][l] = r(l - 1, 0) * in[1] + r(l - 1, 1) * in[2] + r(l - 1, 2) * in[3];
    }
  }
  return out;
}

PositivityReport positivity_check(const DirectIntegralObservable& obs, double t,
                                  const Coin& coin) {
  if (!obs.is_hermitian()) {
    throw ValidationError("positivity_check: observable is not Hermitian at every node");
  }
  const DirectIntegralObservable evolved = heisenberg_evolve(obs, t, coin);
  PositivityReport report;
  report.passed = true;
  for (std::size_t j = 0; j < obs.values.size(); ++j) {
    const auto [lo0, hi0] = hermitian_spectrum(obs.values[j]);
    const auto [lo1, hi1] = hermitian_spectrum(evolved.values[j]);
    report.min_eigenvalue_before.push_back(lo0);
    report.min_eigenvalue_after.push_back(lo1);
    report.max_spectrum_drift =
        std::max({report.max_spectrum_drift, std::abs(lo1 - lo0), std::abs(hi1 - hi0)});
    if (lo0 >= -1e-12 && lo1 < -1e-10) report.passed = false;
  }
  return report;
}

DirectIntegralObservable random_hermitian_observable(const MomentumGrid& grid,
                                                     std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal;
  DirectIntegralObservable obs{grid, std::vector<PauliObservable>(grid.size())};
  for (auto& v : obs.values) {
    for (int l = 0; l < 4; ++l) v[l] = normal(rng);
  }
  return obs;
}

DirectIntegralObservable random_psd_observable(const MomentumGrid& grid, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal;
  std::uniform_real_distribution<double> uniform(0.0, 1.0);
  DirectIntegralObservable obs{grid, std::vector<PauliObservable>(grid.size())};
  for (auto& v : obs.values) {
    const Vec3 dir = Vec3(normal(rng), normal(rng), normal(rng)).normalized();
    const double radius = uniform(rng);
    // about half the nodes sit on the PSD boundary (a_0 = |a|, rank one)
    const double a0 = uniform(rng) < 0.5 ? radius : radius + uniform(rng);
    v[0] = a0;
    for (int l = 1; l <= 3; ++l) v[l] = radius * dir(l - 1);
  }
  return obs;
}

}  // namespace qwalk

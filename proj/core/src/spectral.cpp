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

#include "qwalk/spectral.hpp"

#include <algorithm>
#include <cmath>

#include "qwalk/errors.hpp"
#include "qwalk/stationary.hpp"

namespace qwalk {

namespace {

void require_nondegenerate(const Coin& coin, const char* what) {
  if (coin.is_ballistic()) {
    throw DegenerateCoinError(std::string(what) +
                              ": coin has l2 = 0; use the ballistic path");
  }
}

}  // namespace

double gamma(double k, double abs_l1) {
  return std::acos(std::clamp(abs_l1 * std::cos(k), -1.0, 1.0));
}

double gamma(double k, const Coin& coin) { return gamma(k, coin.abs_l1()); }

Mat2 u_of_k(double k, const Coin& coin) {
  const cplx left = std::polar(1.0, -k);
  const cplx right = std::polar(1.0, k);
  Mat2 u;
  u << left * coin.l1(), left * coin.l2(), right * coin.r1(), right * coin.r2();
  return u;
}

Mat2 appendix_s(double q, const Coin& coin) {
  require_nondegenerate(coin, "appendix_s");
  const double g = gamma(q, coin);
  const double a = coin.abs_l1();
  const cplx u = std::polar(1.0, -q);
  const cplx scale = -std::polar(1.0, coin.theta1()) / coin.l2();
  Mat2 s;
  s << u, u,
       scale * (a * u - std::polar(1.0, g)), scale * (a * u - std::polar(1.0, -g));
  return s;
}

Mat2 unitary_s(double q, const Coin& coin) {
  require_nondegenerate(coin, "unitary_s");
  const double rho = coin.abs_l1() / coin.abs_l2();
  const double rs = rho * std::sin(q);
  const double root = std::sqrt(1.0 + rs * rs);
  const cplx phase = kI * std::polar(1.0, q + coin.theta1() - coin.theta2());
  const cplx alpha_plus = phase * (rs + root);
  const cplx alpha_minus = phase * (rs - root);
  const double n_plus = 1.0 / std::sqrt(1.0 + std::norm(alpha_plus));
  const double n_minus = 1.0 / std::sqrt(1.0 + std::norm(alpha_minus));
  Mat2 s;
  s << n_plus, n_minus, alpha_plus * n_plus, alpha_minus * n_minus;
  return s;
}

Vec3 pauli_axis(double q, const Coin& coin, AxisVariant variant) {
  require_nondegenerate(coin, "pauli_axis");
  const double rho = coin.abs_l1() / coin.abs_l2();
  const double phase = q + coin.theta1() - coin.theta2();
  const double denom = std::sqrt(1.0 + std::pow(rho * std::sin(q), 2));
  const double denom2 = variant == AxisVariant::sine
                            ? denom
                            : std::sqrt(1.0 + std::pow(rho * std::cos(q), 2));
  return {-std::sin(phase) / denom, std::cos(phase) / denom2, -rho * std::sin(q) / denom};
}

Generator hamiltonian(double k, const Coin& coin) {
  require_nondegenerate(coin, "hamiltonian");
  const double q = k - coin.theta1();
  Generator g;
  g.k = k;
  g.gamma = gamma(q, coin);
  g.axis = pauli_axis(q, coin);
  g.matrix = g.gamma * pauli_dot(g.axis);
  return g;
}

Generator ballistic_hamiltonian(double k, const Coin& coin) {
  const double q = wrap_angle(k - coin.theta1());
  Generator g;
  g.k = k;
  g.gamma = std::abs(q);
  g.axis = q > 0.0 ? Vec3(0, 0, -1) : Vec3(0, 0, 1);
  g.matrix = g.gamma * pauli_dot(g.axis);
  return g;
}

Generator generator(double k, const Coin& coin) {
  return coin.is_ballistic() ? ballistic_hamiltonian(k, coin) : hamiltonian(k, coin);
}

Mat2 hamiltonian_spectral_form(double k, const Coin& coin) {
  const double q = k - coin.theta1();
  const double g = gamma(q, coin);
  const Mat2 s = unitary_s(q, coin);
  Mat2 d = Mat2::Zero();
  d(0, 0) = g;
  d(1, 1) = -g;
  return s * d * s.adjoint();
}

Mat2 exp_i_generator(const Generator& g, double t) {
  const double angle = t * g.gamma;
  return std::cos(angle) * Mat2::Identity() + kI * std::sin(angle) * pauli_dot(g.axis);
}

SpectralData eigensystem(double k, const Coin& coin) {
  require_nondegenerate(coin, "eigensystem");
  const double q = k - coin.theta1();
  SpectralData d;
  d.k = k;
  d.gamma = gamma(q, coin);
  d.lambda_plus = std::polar(1.0, d.gamma);
  d.lambda_minus = std::polar(1.0, -d.gamma);
  d.s_appendix = appendix_s(q, coin);
  d.s_unitary = unitary_s(q, coin);
  d.h = pauli_axis(q, coin);
  d.hamiltonian = d.gamma * pauli_dot(d.h);
  return d;
}

StationaryInverses s_inverse_closed_form(double y, const Coin& coin) {
  require_nondegenerate(coin, "s_inverse_closed_form");
  const StationaryPoints sp = stationary_points(y, coin);
  const double a = coin.abs_l1();
  const double th1 = coin.theta1();
  const double r = std::sqrt((a - y) * (a + y)) / std::sqrt(1.0 - a * a);
  const cplx big_l = coin.l2() * std::polar(1.0, -th1);
  const cplx w_plus(y, r);
  const cplx w_minus(y, -r);

  // At +c_j the first row pairs (1 - y) with -w; at -c_j the rows swap and the
  // imaginary sign of w flips.
  auto at_plus = [&](double c, cplx w) {
    Mat2 m;
    m << (1.0 - y) / big_l, -w / a, (1.0 + y) / big_l, w / a;
    return (coin.l2() * std::polar(1.0, c - th1) / 2.0 * m).eval();
  };
  auto at_minus = [&](double c, cplx w) {
    Mat2 m;
    m << (1.0 + y) / big_l, w / a, (1.0 - y) / big_l, -w / a;
    return (coin.l2() * std::polar(1.0, -(c + th1)) / 2.0 * m).eval();
  };
  return {at_plus(sp.c1, w_plus), at_plus(sp.c2, w_minus), at_minus(sp.c1, w_minus),
          at_minus(sp.c2, w_plus)};
}

}  // namespace qwalk

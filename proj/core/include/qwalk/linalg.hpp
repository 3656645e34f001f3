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
#include <cmath>
#include <complex>
#include <numbers>

#include <Eigen/Dense>

namespace qwalk {

using cplx = std::complex<double>;
using Mat2 = Eigen::Matrix2cd;
using Spinor = Eigen::Vector2cd;
using Vec3 = Eigen::Vector3d;
using Mat3 = Eigen::Matrix3d;

inline constexpr double kPi = std::numbers::pi;
inline constexpr cplx kI{0.0, 1.0};

/// Pauli matrices sigma_0 (identity) through sigma_3.
inline Mat2 sigma(int l) {
  Mat2 m;
  switch (l) {
    case 0: m << 1, 0, 0, 1; break;
    case 1: m << 0, 1, 1, 0; break;
    case 2: m << 0, -kI, kI, 0; break;
    default: m << 1, 0, 0, -1; break;
  }
  return m;
}

/// h . sigma for a real 3-vector h.
inline Mat2 pauli_dot(const Vec3& h) {
  Mat2 m;
  m << h(2), cplx(h(0), -h(1)), cplx(h(0), h(1)), -h(2);
  return m;
}

/// Cross-product matrix: cross_matrix(a) * b == a.cross(b).
inline Mat3 cross_matrix(const Vec3& a) {
  Mat3 m;
  m << 0, -a(2), a(1),
       a(2), 0, -a(0),
       -a(1), a(0), 0;
  return m;
}

/// Reduce an angle to the principal branch (-pi, pi].
inline double wrap_angle(double a) {
  double r = std::remainder(a, 2.0 * kPi);
  if (r <= -kPi) r += 2.0 * kPi;
  return r;
}

}  // namespace qwalk

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

#include "qwalk/coin.hpp"

#include <cmath>
#include <sstream>

#include "qwalk/errors.hpp"

namespace qwalk {

namespace {

void check_unitary(const Mat2& u) {
  auto fail = [](const char* relation, double defect) {
    std::ostringstream os;
    os << "coin is not unitary: " << relation << " violated (defect " << defect << ")";
    throw ValidationError(os.str());
  };
  if (!u.allFinite()) throw ValidationError("coin has non-finite entries");
  const double row1 = std::abs(u.row(0).squaredNorm() - 1.0);
  if (row1 > kUnitarityTolerance) fail("|l1|^2 + |l2|^2 = 1 (row 1)", row1);
  const double row2 = std::abs(u.row(1).squaredNorm() - 1.0);
  if (row2 > kUnitarityTolerance) fail("|r1|^2 + |r2|^2 = 1 (row 2)", row2);
  const double cross = std::abs(u(0, 0) * std::conj(u(1, 0)) + u(0, 1) * std::conj(u(1, 1)));
  if (cross > kUnitarityTolerance) fail("l1 conj(r1) + l2 conj(r2) = 0 (rows 1, 2)", cross);
  const double col1 = std::abs(u.col(0).squaredNorm() - 1.0);
  if (col1 > kUnitarityTolerance) fail("|l1|^2 + |r1|^2 = 1 (column 1)", col1);
  const double col2 = std::abs(u.col(1).squaredNorm() - 1.0);
  if (col2 > kUnitarityTolerance) fail("|l2|^2 + |r2|^2 = 1 (column 2)", col2);
}

}  // namespace

Coin::Coin(const Mat2& m) : m_(m) {
  theta1_ = std::abs(l1()) == 0.0 ? 0.0 : std::arg(l1());
  theta2_ = std::abs(l2()) == 0.0 ? 0.0 : std::arg(l2());
  // std::arg returns [-pi, pi]; the branch used throughout is (-pi, pi].
  if (theta1_ == -kPi) theta1_ = kPi;
  if (theta2_ == -kPi) theta2_ = kPi;
}

Coin Coin::normalize_phase(const Mat2& u) {
  check_unitary(u);
  double arg_det = std::arg(u.determinant());
  if (arg_det == -kPi) arg_det = kPi;
  return Coin(u * std::polar(1.0, -0.5 * arg_det));
}

Coin Coin::hadamard_switched() {
  const double s = 1.0 / std::sqrt(2.0);
  Mat2 u;
  u << s, -s, s, s;
  return Coin(u);
}

Coin Coin::from_top_row(cplx l1, cplx l2) {
  Mat2 u;
  u << l1, l2, -std::conj(l2), std::conj(l1);
  return normalize_phase(u);
}

}  // namespace qwalk

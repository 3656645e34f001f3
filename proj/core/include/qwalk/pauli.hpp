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

#include "qwalk/linalg.hpp"

namespace qwalk {

/// A 2x2 operator as coefficients over {sigma_0, sigma_1, sigma_2, sigma_3}.
/// Coefficients are real exactly when the operator is Hermitian.
struct PauliObservable {
  std::array<cplx, 4> a{};

  cplx& operator[](int l) { return a[static_cast<std::size_t>(l)]; }
  const cplx& operator[](int l) const { return a[static_cast<std::size_t>(l)]; }

  bool is_hermitian(double tol = 1e-12) const;
};

/// a_l = tr(sigma_l A) / 2.
PauliObservable pauli_decompose(const Mat2& a);
/// A = sum_l a_l sigma_l.
Mat2 pauli_compose(const PauliObservable& obs);

}  // namespace qwalk

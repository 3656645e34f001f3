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

#include "qwalk/pauli.hpp"

#include <cmath>

namespace qwalk {

bool PauliObservable::is_hermitian(double tol) const {
  for (const auto& c : a) {
    if (std::abs(c.imag()) > tol) return false;
  }
  return true;
}

PauliObservable pauli_decompose(const Mat2& m) {
  PauliObservable obs;
  obs[0] = 0.5 * (m(0, 0) + m(1, 1));
  obs[1] = 0.5 * (m(0, 1) + m(1, 0));
  obs[2] = 0.5 * kI * (m(0, 1) - m(1, 0));
  obs[3] = 0.5 * (m(0, 0) - m(1, 1));
  return obs;
}

Mat2 pauli_compose(const PauliObservable& obs) {
  Mat2 m;
  m << obs[0] + obs[3], obs[1] - kI * obs[2],
       obs[1] + kI * obs[2], obs[0] - obs[3];
  return m;
}

}  // namespace qwalk

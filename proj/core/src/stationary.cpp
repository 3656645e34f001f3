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

#include "qwalk/stationary.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "qwalk/errors.hpp"
#include "qwalk/spectral.hpp"

namespace qwalk {

StationaryPoints stationary_points(double y, const Coin& coin) {
  const double a = coin.abs_l1();
  if (!(a > 0.0 && a < 1.0)) {
    throw DomainError("stationary points need 0 < |l1| < 1");
  }
  if (!(std::abs(y) < a)) {
    std::ostringstream os;
    os << "stationary points need |y| < |l1| = " << a << ", got y = " << y;
    throw DomainError(os.str());
  }
  const double s = y * std::sqrt(1.0 - a * a) / (a * std::sqrt(1.0 - y * y));
  StationaryPoints sp;
  sp.y = y;
  sp.c1 = std::asin(std::clamp(s, -1.0, 1.0));
  sp.c2 = kPi - sp.c1;
  return sp;
}

double group_velocity(double k, double abs_l1) {
  return abs_l1 * std::sin(k) / std::sin(gamma(k, abs_l1));
}

}  // namespace qwalk

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

namespace qwalk {

/// Solutions of gamma'(k) = y, the points that dominate exp(i n (gamma(k) - y k))
/// for large n. c2 = pi - c1; c1 is in [0, pi/2) for y >= 0 and negative for y < 0.
struct StationaryPoints {
  double y = 0.0;
  double c1 = 0.0;
  double c2 = 0.0;
};

/// c1 = arcsin(y sqrt(1 - |l1|^2) / (|l1| sqrt(1 - y^2))).
/// Throws DomainError unless |y| < |l1| and 0 < |l1| < 1.
StationaryPoints stationary_points(double y, const Coin& coin);

/// gamma'(k) = |l1| sin k / sin gamma(k).
double group_velocity(double k, double abs_l1);

}  // namespace qwalk

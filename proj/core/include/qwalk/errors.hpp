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

#include <stdexcept>
#include <string>

namespace qwalk {

/// Input failed a contract check (non-unitary coin, unnormalized qubit, bad config field).
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Argument outside the domain of a closed-form expression (e.g. |y| >= |l1|).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// The coin has l2 = 0 (or |l2| below the degeneracy threshold); the eigenvector
/// formulas divide by l2 and callers must use the ballistic path instead.
class DegenerateCoinError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// The momentum grid is too small to represent the state without wrap-around.
class AliasingError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace qwalk

// Copyright 2026 The demipath Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Exhaustive recognition of Demidenko and Kalmanson matrices.
//
// For 1 <= i < j < k < l <= n:
//   Demidenko / Kalmanson-1:  c_ij + c_kl <= c_jl + c_ik
//   Kalmanson-2:              c_il + c_jk <= c_jl + c_ik
//
// Both checkers scan all O(n^4) quadruples in lexicographic order and report
// the first violation.

#ifndef DEMIPATH_MATRIX_CHECKS_H_
#define DEMIPATH_MATRIX_CHECKS_H_

#include <array>
#include <optional>
#include <string>

#include "demipath/distance_matrix.h"

namespace demipath {

enum class Inequality { kNone, kDemidenko, kKalmanson1, kKalmanson2 };

const char* InequalityName(Inequality inequality);

struct CheckReport {
  bool holds = true;
  // 1-based (i, j, k, l), i < j < k < l. Present iff !holds.
  std::optional<std::array<int, 4>> witness;
  Inequality violated = Inequality::kNone;
  // rhs - lhs at the witness; negative beyond the tolerance when violated.
  double slack = 0.0;

  std::string WitnessString() const;
};

CheckReport IsDemidenko(const DistanceMatrix& matrix,
                        double tolerance = kDefaultTolerance);

CheckReport IsKalmanson(const DistanceMatrix& matrix,
                        double tolerance = kDefaultTolerance);

}  // namespace demipath

#endif  // DEMIPATH_MATRIX_CHECKS_H_

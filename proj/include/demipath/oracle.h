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

// Exponential exact solvers used as ground truth. They make no assumption on
// the matrix class. Size guards are hard errors (kTooLarge).

#ifndef DEMIPATH_ORACLE_H_
#define DEMIPATH_ORACLE_H_

#include "demipath/city_path.h"
#include "demipath/distance_matrix.h"
#include "demipath/solve_result.h"

namespace demipath {

inline constexpr int kMaxBruteForceCities = 10;
inline constexpr int kMaxHeldKarpCities = 20;

// Enumerates all (n-2)! interior orders. Returns the lexicographically
// smallest optimal path.
SolveResult BruteForcePath(const DistanceMatrix& matrix, City s, City t);

// Subset dynamic program, O(2^n n^2).
SolveResult HeldKarpPath(const DistanceMatrix& matrix, City s, City t);

// Optimal closed tour starting at city 1. Needs 3 <= n <= 20.
SolveResult HeldKarpTour(const DistanceMatrix& matrix);

}  // namespace demipath

#endif  // DEMIPATH_ORACLE_H_

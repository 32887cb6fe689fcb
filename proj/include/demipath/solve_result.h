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

#ifndef DEMIPATH_SOLVE_RESULT_H_
#define DEMIPATH_SOLVE_RESULT_H_

#include <cstddef>
#include <optional>

#include "demipath/city_path.h"

namespace demipath {

struct SolveStats {
  // Dense cells allocated for pyramidal tables (E, D, Lambda, V).
  std::size_t pyramidal_cells = 0;
  // Gamma and L cells actually evaluated.
  std::size_t gamma_cells = 0;
  std::size_t l_cells = 0;
  // Number of (1,t) dynamic programs run, including subproblems.
  int subproblem_solves = 0;
  double wall_seconds = 0.0;
  // Unset when the class check was skipped.
  std::optional<bool> demidenko_verified;
};

struct SolveOptions {
  double tolerance = 1e-9;
  // Run IsDemidenko() on the input and record the outcome in the stats. The
  // solvers run either way; without the property only the structured-class
  // optimum is guaranteed.
  bool check_class = true;
  // General solver only: recompute every junction separately and throw
  // kCorruptTags if the shared-table result disagrees.
  bool cross_check_junctions = false;
};

struct SolveResult {
  double length = 0.0;
  CityPath path;
  SolveStats stats;
};

}  // namespace demipath

#endif  // DEMIPATH_SOLVE_RESULT_H_

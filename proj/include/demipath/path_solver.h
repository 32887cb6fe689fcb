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

// Shortest Hamiltonian (s, t)-path on a Demidenko matrix.
//
// For 1 < s < t < n the path is split at some p in s+1..t into a prefix on
// cities 1..p-1 running from s to a junction x, and a postfix on
// {x} + [p, n] running from x to t. Postfix lengths T(x, p) come from the
// (1, t) solver on a principal submatrix. The prefix is solved once per p on
// the cities 1..p-1 plus a dummy city p whose distance to x is T(x, p), so
// the (1, t) solver also picks the junction.

#ifndef DEMIPATH_PATH_SOLVER_H_
#define DEMIPATH_PATH_SOLVER_H_

#include <span>
#include <vector>

#include "demipath/city_path.h"
#include "demipath/distance_matrix.h"
#include "demipath/solve_result.h"

namespace demipath {

struct SplitDecomposition {
  int p = 0;
  City x = 0;
  double postfix_length = 0.0;   // T(x, p)
  double combined_length = 0.0;  // prefix length + T(x, p)
  CityPath postfix_path;         // x -> t over {x} + [p, n]
  CityPath prefix_path;          // s -> x over [1, p-1]
};

struct PostfixResult {
  double length = 0.0;
  CityPath path;
};

// T(x, p) and its path in original labels, from a dedicated solve on the
// submatrix {x} + [p, n]. Needs x < p <= t <= n.
PostfixResult PostfixLength(const DistanceMatrix& matrix, int p, City x,
                            City t);

// T(x, p) for every x in 1..p-1 except s, sharing one set of tables.
// Entry x of the result is meaningful for those x only (index 0 unused).
struct PostfixRow {
  std::vector<double> length;
  std::vector<CityPath> path;
  int solves = 0;
};
PostfixRow PostfixLengths(const DistanceMatrix& matrix, int p, City s, City t);

struct AugmentedPrefixResult {
  double length = 0.0;  // prefix length + T(x_best, p)
  City x_best = 0;
  CityPath prefix_path;  // s -> x_best over [1, p-1]
  double sentinel = 0.0;
};

// `t_row[x]` holds T(x, p) for x in 1..p-1, x != s; t_row.size() == p.
// Throws kNoFeasibleJunction when the optimum uses the dummy-to-s edge.
AugmentedPrefixResult AugmentedPrefix(const DistanceMatrix& matrix, int p,
                                      City s, std::span<const double> t_row);

// Joins prefix and postfix at x. Throws kJunctionMismatch.
CityPath AssemblePath(const SplitDecomposition& decomposition);

// Any 1 <= s, t <= n with s != t. Throws kBadEndpoint otherwise.
SolveResult Solve(const DistanceMatrix& matrix, City s, City t,
                  const SolveOptions& options = {});

// Same as Solve() for 1 < s < t < n, also returning the winning split.
SolveResult SolveBySplit(const DistanceMatrix& matrix, City s, City t,
                         const SolveOptions& options,
                         SplitDecomposition* best_split);

}  // namespace demipath

#endif  // DEMIPATH_PATH_SOLVER_H_

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

// Seeded instance families and the two named point-set fixtures. The same
// seed and parameters always give a bit-identical matrix.

#ifndef DEMIPATH_GENERATORS_H_
#define DEMIPATH_GENERATORS_H_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "demipath/distance_matrix.h"

namespace demipath {

// c_ij = f(|i - j|) for a nondecreasing f with f(0) = 0.
enum class BandProfile {
  kRandomSteps,  // f(d) = f(d-1) + step, step drawn from [0, max_step], f(1) >= 1
  kIdentity,     // f(d) = d
  kConstant,     // f(d) = 1 for d >= 1
};

struct BandSpec {
  BandProfile profile = BandProfile::kRandomSteps;
  int max_step = 3;
};

DistanceMatrix GenBanded(int n, std::uint64_t seed, const BandSpec& spec = {});

// n points on an ellipse at distinct integer angle ticks (3600 per turn),
// numbered counterclockwise. Needs n >= 3.
std::vector<Point> ConvexPolygonPoints(int n, std::uint64_t seed);
DistanceMatrix GenConvexPolygon(int n, std::uint64_t seed);
DistanceMatrix RegularPolygon(int n);

// A rooted ordered tree. Node 0 is the root; parent[v] < v for v > 0 and
// children are ordered by index. Leaves in that order are cities 1..n.
struct OrderedTree {
  std::vector<int> parent;
  std::vector<double> edge;  // edge[v] is the length of (parent[v], v)
};

OrderedTree StarTree(int leaves, double edge_length = 1.0);
DistanceMatrix TreeLeafDistances(const OrderedTree& tree);

// Random ordered tree with n leaves, 2 or 3 children per internal node and
// integer edge lengths in [1, 5].
DistanceMatrix GenTreeKalmanson(int n, std::uint64_t seed);

struct PerturbedInstance {
  DistanceMatrix matrix;
  bool kalmanson = true;
  int accepted = 0;
  int attempts = 0;
};

// Starts from GenBanded(n, seed) and applies n integer perturbations of size
// at most `magnitude` to random symmetric pairs, each kept only if the
// matrix stays Demidenko. Throws kRetryBudgetExhausted when fewer than n
// perturbations are accepted within `retry_budget` attempts. Needs n >= 4.
PerturbedInstance GenPerturbedDemidenko(int n, std::uint64_t seed,
                                        int magnitude = 3,
                                        int retry_budget = 0);

enum class Family { kBanded, kConvexPolygon, kTreeKalmanson, kPerturbed };

std::string_view FamilyName(Family family);
// Accepts "banded", "convex", "convex-polygon", "tree", "tree-kalmanson",
// "perturbed".
std::optional<Family> ParseFamily(std::string_view name);

// Default parameters for each family; used by the verify and bench commands.
DistanceMatrix Generate(Family family, int n, std::uint64_t seed);

// Named point sets: "fig1" (19 points in convex position) and "fig3"
// (12 points, Demidenko but not Kalmanson).
std::optional<std::vector<Point>> FixturePoints(std::string_view name);
std::vector<std::string> FixtureNames();

}  // namespace demipath

#endif  // DEMIPATH_GENERATORS_H_

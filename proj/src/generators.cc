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

#include "demipath/generators.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>
#include <string>

#include "demipath/matrix_checks.h"
#include "demipath/rng.h"

namespace demipath {

namespace {

constexpr int kTicksPerTurn = 3600;
constexpr double kSemiMajor = 1000.0;
constexpr double kSemiMinor = 600.0;

void RequireSize(int n, int minimum, const char* what) {
  if (n < minimum) {
    throw DemipathError(ErrorCode::kTooSmall,
                        std::string(what) + " needs n >= " +
                            std::to_string(minimum));
  }
}

// Appends a subtree with `leaves` leaves below `parent` in preorder.
void GrowTree(SplitMix64& rng, int parent, int leaves, OrderedTree& tree) {
  const int node = static_cast<int>(tree.parent.size());
  tree.parent.push_back(parent);
  tree.edge.push_back(parent < 0 ? 0.0 : static_cast<double>(rng.Uniform(1, 5)));
  if (leaves == 1) return;
  const int children = static_cast<int>(rng.Uniform(2, std::min(leaves, 3)));
  int remaining = leaves;
  for (int c = 0; c + 1 < children; ++c) {
    const int part =
        static_cast<int>(rng.Uniform(1, remaining - (children - 1 - c)));
    GrowTree(rng, node, part, tree);
    remaining -= part;
  }
  GrowTree(rng, node, remaining, tree);
}

const std::vector<Point> kFig1 = {
    {0, 6},   {0, 10},  {1, 11},  {4, 13},  {8, 15},  {12, 15}, {17, 15},
    {22, 14}, {25, 13}, {28, 10}, {29, 6},  {28, 5},  {26, 3},  {22, 1},
    {18, 0},  {14, 0},  {9, 0},   {5, 1},   {1, 3}};

const std::vector<Point> kFig3 = {
    {29, 13}, {31, 10}, {27, 17}, {38, 30}, {31, 30}, {30, 33},
    {14, 24}, {3, 19},  {5, 24},  {9, 30},  {6, 45},  {10, 37}};

}  // namespace

DistanceMatrix GenBanded(int n, std::uint64_t seed, const BandSpec& spec) {
  RequireSize(n, 2, "banded generator");
  std::vector<double> f(n, 0.0);
  SplitMix64 rng(seed);
  for (int d = 1; d < n; ++d) {
    switch (spec.profile) {
      case BandProfile::kRandomSteps:
        f[d] = f[d - 1] + static_cast<double>(rng.Uniform(0, spec.max_step));
        if (d == 1) f[d] = std::max(f[d], 1.0);
        break;
      case BandProfile::kIdentity:
        f[d] = d;
        break;
      case BandProfile::kConstant:
        f[d] = 1.0;
        break;
    }
  }
  DistanceMatrix m(n);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) m.SetSymmetric(i, j, f[j - i]);
  }
  return m;
}

std::vector<Point> ConvexPolygonPoints(int n, std::uint64_t seed) {
  RequireSize(n, 3, "convex polygon generator");
  if (n > kTicksPerTurn) {
    throw DemipathError(ErrorCode::kTooLarge, "too many polygon vertices");
  }
  SplitMix64 rng(seed);
  std::set<int> ticks;
  while (static_cast<int>(ticks.size()) < n) {
    ticks.insert(static_cast<int>(rng.Uniform(0, kTicksPerTurn - 1)));
  }
  std::vector<Point> points;
  points.reserve(n);
  for (int tick : ticks) {
    const double angle = 2.0 * std::numbers::pi * tick / kTicksPerTurn;
    points.push_back({kSemiMajor * std::cos(angle), kSemiMinor * std::sin(angle)});
  }
  return points;
}

DistanceMatrix GenConvexPolygon(int n, std::uint64_t seed) {
  return EuclideanFromPoints(ConvexPolygonPoints(n, seed));
}

DistanceMatrix RegularPolygon(int n) {
  RequireSize(n, 3, "regular polygon");
  std::vector<Point> points;
  for (int i = 0; i < n; ++i) {
    const double angle = 2.0 * std::numbers::pi * i / n;
    points.push_back({std::cos(angle), std::sin(angle)});
  }
  return EuclideanFromPoints(points);
}

OrderedTree StarTree(int leaves, double edge_length) {
  OrderedTree tree;
  tree.parent.push_back(-1);
  tree.edge.push_back(0.0);
  for (int i = 0; i < leaves; ++i) {
    tree.parent.push_back(0);
    tree.edge.push_back(edge_length);
  }
  return tree;
}

DistanceMatrix TreeLeafDistances(const OrderedTree& tree) {
  const int nodes = static_cast<int>(tree.parent.size());
  std::vector<int> depth(nodes, 0);
  std::vector<double> dist(nodes, 0.0);
  std::vector<bool> has_child(nodes, false);
  for (int v = 1; v < nodes; ++v) {
    const int u = tree.parent[v];
    if (u < 0 || u >= v) {
      throw DemipathError(ErrorCode::kBadIndexSet,
                          "tree nodes must follow their parents");
    }
    depth[v] = depth[u] + 1;
    dist[v] = dist[u] + tree.edge[v];
    has_child[u] = true;
  }
  // Preorder numbering puts the leaves left to right.
  std::vector<int> leaves;
  for (int v = 0; v < nodes; ++v) {
    if (!has_child[v]) leaves.push_back(v);
  }
  const int n = static_cast<int>(leaves.size());
  RequireSize(n, 2, "tree metric");
  DistanceMatrix m(n);
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      int x = leaves[a];
      int y = leaves[b];
      while (x != y) {
        if (depth[x] >= depth[y]) {
          x = tree.parent[x];
        } else {
          y = tree.parent[y];
        }
      }
      m.SetSymmetric(a, b, dist[leaves[a]] + dist[leaves[b]] - 2.0 * dist[x]);
    }
  }
  return m;
}

DistanceMatrix GenTreeKalmanson(int n, std::uint64_t seed) {
  RequireSize(n, 2, "tree generator");
  SplitMix64 rng(seed);
  OrderedTree tree;
  GrowTree(rng, -1, n, tree);
  return TreeLeafDistances(tree);
}

PerturbedInstance GenPerturbedDemidenko(int n, std::uint64_t seed,
                                        int magnitude, int retry_budget) {
  RequireSize(n, 4, "perturbed generator");
  PerturbedInstance out{GenBanded(n, seed), true, 0, 0};
  if (magnitude > 0) {
    const int budget = retry_budget > 0 ? retry_budget : 100 * n;
    // A separate stream so magnitude 0 leaves the banded draw untouched.
    SplitMix64 rng(seed ^ 0x5DEECE66DULL);
    while (out.accepted < n) {
      if (out.attempts == budget) {
        throw DemipathError(ErrorCode::kRetryBudgetExhausted,
                            "accepted " + std::to_string(out.accepted) +
                                " of " + std::to_string(n) +
                                " perturbations in " + std::to_string(budget) +
                                " attempts");
      }
      ++out.attempts;
      const int i = static_cast<int>(rng.Uniform(0, n - 1));
      const int j = static_cast<int>(rng.Uniform(0, n - 1));
      const double delta =
          static_cast<double>(rng.Uniform(1, magnitude)) *
          (rng.Uniform(0, 1) == 0 ? -1.0 : 1.0);
      if (i == j) continue;
      const double old_value = out.matrix(i, j);
      if (old_value + delta < 0.0) continue;
      out.matrix.SetSymmetric(i, j, old_value + delta);
      if (IsDemidenko(out.matrix).holds) {
        ++out.accepted;
      } else {
        out.matrix.SetSymmetric(i, j, old_value);
      }
    }
  }
  out.kalmanson = IsKalmanson(out.matrix).holds;
  return out;
}

std::string_view FamilyName(Family family) {
  switch (family) {
    case Family::kBanded:
      return "banded";
    case Family::kConvexPolygon:
      return "convex-polygon";
    case Family::kTreeKalmanson:
      return "tree-kalmanson";
    case Family::kPerturbed:
      return "perturbed";
  }
  return "unknown";
}

std::optional<Family> ParseFamily(std::string_view name) {
  if (name == "banded") return Family::kBanded;
  if (name == "convex" || name == "convex-polygon") {
    return Family::kConvexPolygon;
  }
  if (name == "tree" || name == "tree-kalmanson") return Family::kTreeKalmanson;
  if (name == "perturbed") return Family::kPerturbed;
  return std::nullopt;
}

DistanceMatrix Generate(Family family, int n, std::uint64_t seed) {
  switch (family) {
    case Family::kBanded:
      return GenBanded(n, seed);
    case Family::kConvexPolygon:
      return GenConvexPolygon(n, seed);
    case Family::kTreeKalmanson:
      return GenTreeKalmanson(n, seed);
    case Family::kPerturbed:
      return GenPerturbedDemidenko(n, seed).matrix;
  }
  throw DemipathError(ErrorCode::kParseError, "unknown family");
}

std::optional<std::vector<Point>> FixturePoints(std::string_view name) {
  if (name == "fig1") return kFig1;
  if (name == "fig3") return kFig3;
  return std::nullopt;
}

std::vector<std::string> FixtureNames() { return {"fig1", "fig3"}; }

}  // namespace demipath

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

#include "demipath/oracle.h"

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <limits>
#include <string>
#include <vector>

namespace demipath {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void CheckEndpoints(const DistanceMatrix& matrix, City s, City t) {
  const int n = matrix.size();
  if (s < 1 || s > n || t < 1 || t > n || s == t) {
    throw DemipathError(ErrorCode::kBadEndpoint,
                        "endpoints (" + std::to_string(s) + "," +
                            std::to_string(t) + ") invalid for n = " +
                            std::to_string(n));
  }
}

void CheckSize(const DistanceMatrix& matrix, int limit) {
  if (matrix.size() > limit) {
    throw DemipathError(ErrorCode::kTooLarge,
                        "oracle limited to " + std::to_string(limit) +
                            " cities, got " + std::to_string(matrix.size()));
  }
  if (matrix.size() < 2) {
    throw DemipathError(ErrorCode::kTooSmall, "need at least 2 cities");
  }
}

double Elapsed(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
      .count();
}

// Shortest path from `source` through every city of `interior` ending at
// `sink` (sink may equal source for tours). Cities are 0-based here.
SolveResult SubsetDp(const DistanceMatrix& c, int source, int sink,
                     const std::vector<int>& interior) {
  const int k = static_cast<int>(interior.size());
  SolveResult result;
  if (k == 0) {
    result.length = c(source, sink);
    result.path.cities = {source + 1, sink + 1};
    return result;
  }
  const std::size_t masks = std::size_t{1} << k;
  std::vector<double> dp(masks * k, kInf);
  std::vector<std::int8_t> parent(masks * k, -1);
  for (int v = 0; v < k; ++v) {
    dp[(std::size_t{1} << v) * k + v] = c(source, interior[v]);
  }
  for (std::size_t mask = 1; mask < masks; ++mask) {
    for (int v = 0; v < k; ++v) {
      if (!(mask & (std::size_t{1} << v))) continue;
      const double here = dp[mask * k + v];
      if (here == kInf) continue;
      for (int u = 0; u < k; ++u) {
        if (mask & (std::size_t{1} << u)) continue;
        const std::size_t next = mask | (std::size_t{1} << u);
        const double value = here + c(interior[v], interior[u]);
        if (value < dp[next * k + u]) {
          dp[next * k + u] = value;
          parent[next * k + u] = static_cast<std::int8_t>(v);
        }
      }
    }
  }
  const std::size_t full = masks - 1;
  double best = kInf;
  int last = -1;
  for (int v = 0; v < k; ++v) {
    const double value = dp[full * k + v] + c(interior[v], sink);
    if (value < best) {
      best = value;
      last = v;
    }
  }
  std::vector<City> reversed = {sink + 1};
  std::size_t mask = full;
  for (int v = last; v >= 0;) {
    reversed.push_back(interior[v] + 1);
    const int prev = parent[mask * k + v];
    mask &= ~(std::size_t{1} << v);
    v = prev;
  }
  reversed.push_back(source + 1);
  result.length = best;
  result.path.cities.assign(reversed.rbegin(), reversed.rend());
  return result;
}

}  // namespace

SolveResult BruteForcePath(const DistanceMatrix& matrix, City s, City t) {
  const auto start = std::chrono::steady_clock::now();
  CheckSize(matrix, kMaxBruteForceCities);
  CheckEndpoints(matrix, s, t);
  const int n = matrix.size();
  std::vector<City> order = {s};
  for (City x = 1; x <= n; ++x) {
    if (x != s && x != t) order.push_back(x);
  }
  order.push_back(t);

  SolveResult result;
  result.length = kInf;
  CityPath candidate;
  do {
    double length = 0.0;
    for (int a = 0; a + 1 < n; ++a) length += matrix(order[a] - 1, order[a + 1] - 1);
    if (length < result.length) {
      result.length = length;
      result.path.cities = order;
    }
  } while (std::next_permutation(order.begin() + 1, order.end() - 1));
  result.stats.wall_seconds = Elapsed(start);
  return result;
}

SolveResult HeldKarpPath(const DistanceMatrix& matrix, City s, City t) {
  const auto start = std::chrono::steady_clock::now();
  CheckSize(matrix, kMaxHeldKarpCities);
  CheckEndpoints(matrix, s, t);
  std::vector<int> interior;
  for (int x = 0; x < matrix.size(); ++x) {
    if (x != s - 1 && x != t - 1) interior.push_back(x);
  }
  SolveResult result = SubsetDp(matrix, s - 1, t - 1, interior);
  result.stats.wall_seconds = Elapsed(start);
  return result;
}

SolveResult HeldKarpTour(const DistanceMatrix& matrix) {
  const auto start = std::chrono::steady_clock::now();
  CheckSize(matrix, kMaxHeldKarpCities);
  if (matrix.size() < 3) {
    throw DemipathError(ErrorCode::kTooSmall, "a tour needs at least 3 cities");
  }
  std::vector<int> interior;
  for (int x = 1; x < matrix.size(); ++x) interior.push_back(x);
  SolveResult result = SubsetDp(matrix, 0, 0, interior);
  result.path.cities.pop_back();
  result.path.kind = PathKind::kTour;
  result.stats.wall_seconds = Elapsed(start);
  return result;
}

}  // namespace demipath

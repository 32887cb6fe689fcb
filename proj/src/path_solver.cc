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

#include "demipath/path_solver.h"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "demipath/endpoint_one_solver.h"
#include "demipath/matrix_checks.h"

namespace demipath {

namespace {

void CheckEndpoints(int n, City s, City t) {
  if (s < 1 || s > n || t < 1 || t > n || s == t) {
    throw DemipathError(ErrorCode::kBadEndpoint,
                        "endpoints (" + std::to_string(s) + "," +
                            std::to_string(t) + ") invalid for n = " +
                            std::to_string(n));
  }
}

// {first} + [p, n], 1-based and increasing.
std::vector<int> PostfixCities(int n, int p, City first) {
  std::vector<int> keep(n - p + 2);
  keep[0] = first;
  std::iota(keep.begin() + 1, keep.end(), p);
  return keep;
}

// Local city y of a postfix instance maps to `first` (y == 1) or p + y - 2.
CityPath PostfixToOriginal(const CityPath& local, int p, City first) {
  CityPath path = local;
  for (City& c : path.cities) c = c == 1 ? first : p + c - 2;
  return path;
}

bool SameLength(double a, double b, double tolerance) {
  return std::abs(a - b) <= tolerance * std::max({1.0, std::abs(a), std::abs(b)});
}

}  // namespace

PostfixResult PostfixLength(const DistanceMatrix& matrix, int p, City x,
                            City t) {
  const int n = matrix.size();
  if (!(1 <= x && x < p && p <= t && t <= n)) {
    throw DemipathError(ErrorCode::kOutOfRange,
                        "postfix needs x < p <= t <= n");
  }
  const std::vector<int> keep = PostfixCities(n, p, x);
  const DistanceMatrix sub = PrincipalSubmatrix(matrix, keep);
  const EndpointOneSolver solver(sub, t - p + 2);
  const SolveResult local = solver.Solve();
  return {local.length, PostfixToOriginal(local.path, p, x)};
}

PostfixRow PostfixLengths(const DistanceMatrix& matrix, int p, City s,
                          City t) {
  const int n = matrix.size();
  if (!(2 <= p && p <= t && t <= n)) {
    throw DemipathError(ErrorCode::kOutOfRange, "postfix needs 2 <= p <= t");
  }
  // City p - 1 only holds the place of the junction; its row is replaced.
  const DistanceMatrix sub = PrincipalSubmatrix(matrix, PostfixCities(n, p, p - 1));
  const EndpointOneSolver solver(sub, t - p + 2);
  const int size = sub.size();

  PostfixRow row;
  row.length.assign(p, 0.0);
  row.path.resize(p);
  std::vector<double> start_row(size + 1, 0.0);
  for (City x = 1; x < p; ++x) {
    if (x == s) continue;
    for (int y = 2; y <= size; ++y) start_row[y] = matrix(x - 1, p + y - 3);
    const SolveResult local = solver.SolveWithStartRow(start_row);
    row.length[x] = local.length;
    row.path[x] = PostfixToOriginal(local.path, p, x);
    ++row.solves;
  }
  return row;
}

AugmentedPrefixResult AugmentedPrefix(const DistanceMatrix& matrix, int p,
                                      City s, std::span<const double> t_row) {
  if (!(1 <= s && s < p && p <= matrix.size()) ||
      static_cast<int>(t_row.size()) != p) {
    throw DemipathError(ErrorCode::kOutOfRange,
                        "augmented prefix needs s < p and a T row of size p");
  }
  double max_t = 0.0;
  for (City x = 1; x < p; ++x) {
    if (x != s) max_t = std::max(max_t, std::abs(t_row[x]));
  }
  // Cities 1..p-1 plus the dummy p.
  DistanceMatrix augmented(p);
  for (int i = 0; i + 1 < p; ++i) {
    for (int j = 0; j + 1 < p; ++j) augmented(i, j) = matrix(i, j);
  }
  AugmentedPrefixResult result;
  result.sentinel = 4.0 * (matrix.MaxAbsEntry() + max_t) * p + 1.0;
  for (City x = 1; x < p; ++x) {
    augmented.SetSymmetric(p - 1, x - 1, x == s ? result.sentinel : t_row[x]);
  }

  // Renumbering i -> p + 1 - i makes the dummy city 1.
  const EndpointOneSolver solver(Reverse(augmented), p + 1 - s);
  const SolveResult local = solver.Solve();
  if (local.length >= result.sentinel) {
    throw DemipathError(ErrorCode::kNoFeasibleJunction,
                        "no junction for p = " + std::to_string(p));
  }
  // local: dummy, x_best, ..., s (renumbered). Drop the dummy and read it
  // backwards in original labels.
  const std::vector<City>& c = local.path.cities;
  result.prefix_path.cities.reserve(c.size() - 1);
  for (auto it = c.rbegin(); it + 1 != c.rend(); ++it) {
    result.prefix_path.cities.push_back(p + 1 - *it);
  }
  result.x_best = result.prefix_path.back();
  result.length = local.length;
  return result;
}

CityPath AssemblePath(const SplitDecomposition& d) {
  if (d.prefix_path.cities.empty() || d.postfix_path.cities.empty() ||
      d.prefix_path.back() != d.x || d.postfix_path.front() != d.x) {
    throw DemipathError(ErrorCode::kJunctionMismatch,
                        "prefix and postfix do not meet at " +
                            std::to_string(d.x));
  }
  CityPath path = d.prefix_path;
  path.cities.insert(path.cities.end(), d.postfix_path.cities.begin() + 1,
                     d.postfix_path.cities.end());
  return path;
}

SolveResult SolveBySplit(const DistanceMatrix& matrix, City s, City t,
                         const SolveOptions& options,
                         SplitDecomposition* best_split) {
  const int n = matrix.size();
  if (!(1 < s && s < t && t < n)) {
    throw DemipathError(ErrorCode::kBadEndpoint,
                        "split solver needs 1 < s < t < n");
  }
  SolveResult result;
  std::optional<SplitDecomposition> best;
  for (int p = s + 1; p <= t; ++p) {
    const PostfixRow row = PostfixLengths(matrix, p, s, t);
    const AugmentedPrefixResult prefix =
        AugmentedPrefix(matrix, p, s, row.length);
    result.stats.subproblem_solves += row.solves + 2;

    if (options.cross_check_junctions) {
      // Each T(x, p) from its own submatrix, then one prefix run per x with
      // every other junction closed off.
      double per_x_best = prefix.sentinel;
      for (City x = 1; x < p; ++x) {
        if (x == s) continue;
        const PostfixResult alone = PostfixLength(matrix, p, x, t);
        if (!SameLength(alone.length, row.length[x], options.tolerance)) {
          throw DemipathError(ErrorCode::kCorruptTags,
                              "shared postfix row disagrees at x = " +
                                  std::to_string(x));
        }
        std::vector<double> single(p, prefix.sentinel);
        single[x] = row.length[x];
        try {
          per_x_best = std::min(per_x_best,
                                AugmentedPrefix(matrix, p, s, single).length);
        } catch (const DemipathError& e) {
          if (e.code() != ErrorCode::kNoFeasibleJunction) throw;
        }
      }
      if (!SameLength(per_x_best, prefix.length, options.tolerance)) {
        throw DemipathError(ErrorCode::kCorruptTags,
                            "shared prefix run disagrees with per-junction "
                            "runs at p = " + std::to_string(p));
      }
    }

    if (!best || prefix.length < best->combined_length) {
      SplitDecomposition d;
      d.p = p;
      d.x = prefix.x_best;
      d.postfix_length = row.length[d.x];
      d.combined_length = prefix.length;
      d.postfix_path = row.path[d.x];
      d.prefix_path = prefix.prefix_path;
      best = std::move(d);
    }
  }
  result.length = best->combined_length;
  result.path = AssemblePath(*best);
  if (best_split != nullptr) *best_split = *best;
  return result;
}

SolveResult Solve(const DistanceMatrix& matrix, City s, City t,
                  const SolveOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  const int n = matrix.size();
  Validate(matrix, options.tolerance);
  CheckEndpoints(n, s, t);
  std::optional<bool> verified;
  if (options.check_class) {
    verified = IsDemidenko(matrix, options.tolerance).holds;
  }

  SolveResult result;
  if (s > t) {
    SolveOptions inner = options;
    inner.check_class = false;
    result = Solve(matrix, t, s, inner);
    std::reverse(result.path.cities.begin(), result.path.cities.end());
  } else if (s == 1) {
    result = EndpointOneSolver(matrix, t).Solve();
  } else if (t == n) {
    result = EndpointOneSolver(Reverse(matrix), n + 1 - s).Solve();
    std::vector<City>& c = result.path.cities;
    for (City& city : c) city = n + 1 - city;
    std::reverse(c.begin(), c.end());
  } else {
    result = SolveBySplit(matrix, s, t, options, nullptr);
  }
  result.stats.demidenko_verified = verified;
  result.stats.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  return result;
}

}  // namespace demipath

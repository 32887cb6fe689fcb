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

// Paths and tours over 1-based city labels, their shape (peaks, valleys,
// monotone runs), forbidden pairs of arcs, and the uncrossing move that
// removes a forbidden pair without increasing length on Demidenko matrices.

#ifndef DEMIPATH_CITY_PATH_H_
#define DEMIPATH_CITY_PATH_H_

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "demipath/distance_matrix.h"

namespace demipath {

using City = int;

enum class PathKind { kPath, kTour };

struct CityPath {
  std::vector<City> cities;
  // Tours do not repeat the first city; the closing arc is implicit.
  PathKind kind = PathKind::kPath;

  City front() const { return cities.front(); }
  City back() const { return cities.back(); }
  int size() const { return static_cast<int>(cities.size()); }

  std::string ToString() const;

  friend bool operator==(const CityPath&, const CityPath&) = default;
};

// Throws kInvalidCity / kDuplicateCity / kTooSmall. A tour needs >= 3 cities.
void CheckPath(const CityPath& path, int n);

// True iff `path` visits every city 1..n exactly once, from s to t.
bool IsSpanningPath(const CityPath& path, int n, City s, City t);

double PathLength(const DistanceMatrix& matrix, const CityPath& path);

struct ShapePoint {
  int position = 0;  // 0-based index into CityPath::cities
  City city = 0;
};

struct MonotoneRun {
  int first = 0;  // positions, inclusive
  int last = 0;
  bool increasing = true;
};

// A first city is a valley when it is left along an increasing arc and a
// peak otherwise; a last city is a peak when it is entered along an
// increasing arc and a valley otherwise.
struct PathShape {
  std::vector<ShapePoint> peaks;
  std::vector<ShapePoint> valleys;
  std::vector<MonotoneRun> runs;

  std::vector<City> PeakCities() const;
  std::vector<City> ValleyCities() const;
};

PathShape AnalyzeShape(const CityPath& path);

// Peaks strictly decrease and valleys strictly increase from left to right.
bool HasMonotoneExtrema(const PathShape& shape);

// Arcs are identified by the position of their tail: arc q is
// (cities[q], cities[q + 1]). `first` < `second`.
struct ArcPair {
  int first = 0;
  int second = 0;

  friend bool operator==(const ArcPair&, const ArcPair&) = default;
};

// True iff the arcs at positions q and r form a forbidden pair, i.e. one is
// (i, a), the other (j, b) with i < j < a < b or i > j > a > b.
bool IsForbiddenPair(const CityPath& path, int q, int r);

// First forbidden pair ordered by (first, second), or nullopt.
std::optional<ArcPair> FindForbiddenPair(const CityPath& path);

// Sum over all arcs of |tail - head|. Strictly decreases under UncrossOnce.
std::int64_t Potential(const CityPath& path);

// Reverses the subpath between the head of the earlier arc and the tail of
// the later one, replacing the crossing pair by two nested arcs. Endpoints
// and the visited set are preserved. Throws kNotAForbiddenPair.
CityPath UncrossOnce(const CityPath& path, ArcPair pair);

// Applies FindForbiddenPair + UncrossOnce until no forbidden pair remains.
// `on_step`, when set, sees every intermediate path after each move.
CityPath UncrossAll(CityPath path,
                    const std::function<void(const CityPath&)>& on_step = {});

}  // namespace demipath

#endif  // DEMIPATH_CITY_PATH_H_

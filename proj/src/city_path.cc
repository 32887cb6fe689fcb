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

#include "demipath/city_path.h"

#include <algorithm>
#include <cstdlib>
#include <string>

namespace demipath {

std::string CityPath::ToString() const {
  std::string out = "<";
  for (std::size_t a = 0; a < cities.size(); ++a) {
    if (a > 0) out += ",";
    out += std::to_string(cities[a]);
  }
  if (kind == PathKind::kTour && !cities.empty()) {
    out += "," + std::to_string(cities.front());
  }
  return out + ">";
}

void CheckPath(const CityPath& path, int n) {
  const int min_size = path.kind == PathKind::kTour ? 3 : 2;
  if (path.size() < min_size) {
    throw DemipathError(ErrorCode::kTooSmall,
                        "path needs at least " + std::to_string(min_size) +
                            " cities");
  }
  std::vector<bool> seen(n + 1, false);
  for (City city : path.cities) {
    if (city < 1 || city > n) {
      throw DemipathError(ErrorCode::kInvalidCity,
                          "city " + std::to_string(city) + " outside 1.." +
                              std::to_string(n));
    }
    if (seen[city]) {
      throw DemipathError(ErrorCode::kDuplicateCity,
                          "city " + std::to_string(city) + " visited twice");
    }
    seen[city] = true;
  }
}

bool IsSpanningPath(const CityPath& path, int n, City s, City t) {
  if (path.kind != PathKind::kPath || path.size() != n || path.front() != s ||
      path.back() != t) {
    return false;
  }
  std::vector<bool> seen(n + 1, false);
  for (City city : path.cities) {
    if (city < 1 || city > n || seen[city]) return false;
    seen[city] = true;
  }
  return true;
}

double PathLength(const DistanceMatrix& matrix, const CityPath& path) {
  CheckPath(path, matrix.size());
  double length = 0.0;
  for (int a = 0; a + 1 < path.size(); ++a) {
    length += matrix(path.cities[a] - 1, path.cities[a + 1] - 1);
  }
  if (path.kind == PathKind::kTour) {
    length += matrix(path.back() - 1, path.front() - 1);
  }
  return length;
}

std::vector<City> PathShape::PeakCities() const {
  std::vector<City> out;
  for (const ShapePoint& p : peaks) out.push_back(p.city);
  return out;
}

std::vector<City> PathShape::ValleyCities() const {
  std::vector<City> out;
  for (const ShapePoint& p : valleys) out.push_back(p.city);
  return out;
}

PathShape AnalyzeShape(const CityPath& path) {
  PathShape shape;
  const std::vector<City>& c = path.cities;
  const int k = path.size();
  if (k < 2) return shape;

  for (int a = 0; a < k; ++a) {
    // +1 when entered / left upward, -1 downward, 0 at an open end.
    const int in = a == 0 ? 0 : (c[a - 1] < c[a] ? 1 : -1);
    const int out = a + 1 == k ? 0 : (c[a] < c[a + 1] ? 1 : -1);
    bool peak;
    if (in == 0) {
      peak = out < 0;
    } else if (out == 0) {
      peak = in > 0;
    } else if (in != out) {
      peak = in > 0;
    } else {
      continue;
    }
    (peak ? shape.peaks : shape.valleys).push_back({a, c[a]});
  }

  int first = 0;
  for (int a = 1; a < k; ++a) {
    const bool up = c[a - 1] < c[a];
    const bool next_up = a + 1 < k && c[a] < c[a + 1];
    if (a + 1 == k || next_up != up) {
      shape.runs.push_back({first, a, up});
      first = a;
    }
  }
  return shape;
}

bool HasMonotoneExtrema(const PathShape& shape) {
  for (std::size_t a = 1; a < shape.peaks.size(); ++a) {
    if (shape.peaks[a].city >= shape.peaks[a - 1].city) return false;
  }
  for (std::size_t a = 1; a < shape.valleys.size(); ++a) {
    if (shape.valleys[a].city <= shape.valleys[a - 1].city) return false;
  }
  return true;
}

namespace {

bool Interleaves(City i, City ti, City j, City tj) {
  return (i < j && j < ti && ti < tj) || (i > j && j > ti && ti > tj);
}

}  // namespace

bool IsForbiddenPair(const CityPath& path, int q, int r) {
  const int arcs = path.size() - 1;
  if (q < 0 || r < 0 || q >= arcs || r >= arcs || q == r) return false;
  const std::vector<City>& c = path.cities;
  return Interleaves(c[q], c[q + 1], c[r], c[r + 1]) ||
         Interleaves(c[r], c[r + 1], c[q], c[q + 1]);
}

std::optional<ArcPair> FindForbiddenPair(const CityPath& path) {
  const int arcs = path.size() - 1;
  for (int q = 0; q < arcs; ++q) {
    for (int r = q + 1; r < arcs; ++r) {
      if (IsForbiddenPair(path, q, r)) return ArcPair{q, r};
    }
  }
  return std::nullopt;
}

std::int64_t Potential(const CityPath& path) {
  std::int64_t total = 0;
  for (int a = 0; a + 1 < path.size(); ++a) {
    total += std::abs(path.cities[a] - path.cities[a + 1]);
  }
  return total;
}

CityPath UncrossOnce(const CityPath& path, ArcPair pair) {
  if (pair.first > pair.second) std::swap(pair.first, pair.second);
  if (!IsForbiddenPair(path, pair.first, pair.second)) {
    throw DemipathError(ErrorCode::kNotAForbiddenPair,
                        "arcs at positions " + std::to_string(pair.first) +
                            " and " + std::to_string(pair.second) +
                            " do not form a forbidden pair");
  }
  // For (i, a) earlier and (j, b) later this yields arcs (i, j) and (a, b).
  // In every orientation of a forbidden pair those are the two "short" sides
  // of the quadruple, which is what the Demidenko inequality bounds.
  CityPath out = path;
  std::reverse(out.cities.begin() + pair.first + 1,
               out.cities.begin() + pair.second + 1);
  return out;
}

CityPath UncrossAll(CityPath path,
                    const std::function<void(const CityPath&)>& on_step) {
  while (auto pair = FindForbiddenPair(path)) {
    path = UncrossOnce(path, *pair);
    if (on_step) on_step(path);
  }
  return path;
}

}  // namespace demipath

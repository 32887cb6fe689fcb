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

#include "demipath/pyramidal_tables.h"

#include <algorithm>
#include <cassert>
#include <chrono>
#include <string>
#include <utility>

namespace demipath {

namespace {

[[noreturn]] void ThrowOutOfRange(const char* table, int outer, City a,
                                  City b) {
  throw DemipathError(ErrorCode::kOutOfRange,
                      std::string(table) + "(" + std::to_string(outer) + "; " +
                          std::to_string(a) + "," + std::to_string(b) +
                          ") is outside the table domain");
}

}  // namespace

PyramidalTables::PyramidalTables(const DistanceMatrix& matrix)
    : matrix_(matrix), n_(matrix.size()) {
  const std::size_t cells =
      static_cast<std::size_t>(n_ + 1) * (n_ + 1) * (n_ + 1);
  e_.assign(cells, 0.0);
  d_.assign(cells, 0.0);
  lambda_.assign(cells, 0.0);
  v_.assign(cells, 0.0);
  e_choice_.assign(cells, kBase);
  d_choice_.assign(cells, kBase);

  prefix_.assign(n_ + 1, 0.0);
  for (City k = 2; k <= n_; ++k) prefix_[k] = prefix_[k - 1] + c(k - 1, k);

  BuildE();
  BuildD();
  BuildLambdaV();
}

void PyramidalTables::BuildE() {
  for (int m = 2; m <= n_; ++m) {
    for (City i = 1; i < m; ++i) e_[Index(m, i, m)] = c(i, m);
    // E_m(i, j) reads E_m(j, j+1) and E_m(i, j+1), both with a larger
    // second index.
    for (City j = m - 1; j >= 2; --j) {
      const double far_tail = e_[Index(m, j, j + 1)];
      for (City i = 1; i < j; ++i) {
        const double far = far_tail + c(i, j + 1);
        const double near = e_[Index(m, i, j + 1)] + c(j + 1, j);
        const std::size_t cell = Index(m, i, j);
        if (far <= near) {
          e_[cell] = far;
          e_choice_[cell] = kFarEnd;
        } else {
          e_[cell] = near;
          e_choice_[cell] = kNearEnd;
        }
      }
    }
  }
}

void PyramidalTables::BuildD() {
  for (int w = 1; w < n_; ++w) {
    for (City i = w + 1; i <= n_; ++i) d_[Index(w, i, w)] = c(i, w);
    for (City j = w + 1; j < n_; ++j) {
      const double far_tail = d_[Index(w, j, j - 1)];
      for (City i = j + 1; i <= n_; ++i) {
        const double far = far_tail + c(i, j - 1);
        const double near = d_[Index(w, i, j - 1)] + c(j - 1, j);
        const std::size_t cell = Index(w, i, j);
        if (far <= near) {
          d_[cell] = far;
          d_choice_[cell] = kFarEnd;
        } else {
          d_[cell] = near;
          d_choice_[cell] = kNearEnd;
        }
      }
    }
  }
}

void PyramidalTables::BuildLambdaV() {
  for (int m = 1; m <= n_; ++m) {
    for (City p = 2; p <= m; ++p) {
      const double tail = e_[Index(m, p - 1, p)];
      for (City i = 1; i < p; ++i) {
        lambda_[Index(m, i, p)] = Chain(i, p - 1) + tail;
      }
    }
  }
  for (int w = 1; w <= n_; ++w) {
    for (City q = w + 1; q <= n_; ++q) {
      for (City j = w; j < q; ++j) {
        v_[Index(w, j, q)] = Chain(j + 1, q) + d_[Index(w, j + 1, j)];
      }
    }
  }
}

double PyramidalTables::E(int m, City i, City j) const {
  if (i > j) std::swap(i, j);
  assert(1 <= i && i < j && j <= m && m <= n_);
  return e_[Index(m, i, j)];
}

double PyramidalTables::D(int w, City i, City j) const {
  if (i < j) std::swap(i, j);
  assert(1 <= w && w <= j && j < i && i <= n_);
  return d_[Index(w, i, j)];
}

double PyramidalTables::Lambda(int m, City i, City p) const {
  if (i > p) std::swap(i, p);
  assert(1 <= i && i <= p && p <= m && m <= n_);
  return lambda_[Index(m, i, p)];
}

double PyramidalTables::V(int w, City j, City q) const {
  if (j > q) std::swap(j, q);
  assert(1 <= w && w <= j && j <= q && q <= n_);
  return v_[Index(w, j, q)];
}

PyramidalTables::Choice PyramidalTables::EChoice(int m, City i, City j) const {
  if (i > j) std::swap(i, j);
  return e_choice_[Index(m, i, j)];
}

PyramidalTables::Choice PyramidalTables::DChoice(int w, City i, City j) const {
  if (i < j) std::swap(i, j);
  return d_choice_[Index(w, i, j)];
}

// Appends the E_m path from i to j (i < j), excluding nothing.
void PyramidalTables::AppendE(int m, City i, City j,
                              std::vector<City>& out) const {
  if (j == m) {
    out.push_back(i);
    out.push_back(m);
    return;
  }
  switch (e_choice_[Index(m, i, j)]) {
    case kFarEnd: {
      // i -> (j+1 ... j): the E_m(j, j+1) path walked backwards.
      out.push_back(i);
      std::vector<City> tail;
      AppendE(m, j, j + 1, tail);
      out.insert(out.end(), tail.rbegin(), tail.rend());
      return;
    }
    case kNearEnd:
      AppendE(m, i, j + 1, out);
      out.push_back(j);
      return;
    case kBase:
      break;
  }
  throw DemipathError(ErrorCode::kCorruptTags, "E table has no choice tag");
}

// Appends the D_w path from i to j (i > j).
void PyramidalTables::AppendD(int w, City i, City j,
                              std::vector<City>& out) const {
  if (j == w) {
    out.push_back(i);
    out.push_back(w);
    return;
  }
  switch (d_choice_[Index(w, i, j)]) {
    case kFarEnd: {
      out.push_back(i);
      std::vector<City> tail;
      AppendD(w, j, j - 1, tail);
      out.insert(out.end(), tail.rbegin(), tail.rend());
      return;
    }
    case kNearEnd:
      AppendD(w, i, j - 1, out);
      out.push_back(j);
      return;
    case kBase:
      break;
  }
  throw DemipathError(ErrorCode::kCorruptTags, "D table has no choice tag");
}

CityPath PyramidalTables::EPath(int m, City from, City to) const {
  const City lo = std::min(from, to);
  const City hi = std::max(from, to);
  if (lo < 1 || lo == hi || hi > m || m > n_) {
    ThrowOutOfRange("E", m, from, to);
  }
  CityPath path;
  AppendE(m, lo, hi, path.cities);
  if (from == hi) std::reverse(path.cities.begin(), path.cities.end());
  return path;
}

CityPath PyramidalTables::DPath(int w, City from, City to) const {
  const City lo = std::min(from, to);
  const City hi = std::max(from, to);
  if (w < 1 || lo < w || lo == hi || hi > n_) {
    ThrowOutOfRange("D", w, from, to);
  }
  CityPath path;
  AppendD(w, hi, lo, path.cities);
  if (from == lo) std::reverse(path.cities.begin(), path.cities.end());
  return path;
}

CityPath PyramidalTables::LambdaPath(int m, City from, City to) const {
  const City lo = std::min(from, to);
  const City hi = std::max(from, to);
  if (lo < 1 || hi > m || m > n_ || (lo == hi && hi != m)) {
    ThrowOutOfRange("Lambda", m, from, to);
  }
  CityPath path;
  if (lo == hi) {
    path.cities = {lo};
    return path;
  }
  for (City k = lo; k < hi - 1; ++k) path.cities.push_back(k);
  AppendE(m, hi - 1, hi, path.cities);
  if (from == hi) std::reverse(path.cities.begin(), path.cities.end());
  return path;
}

CityPath PyramidalTables::VPath(int w, City from, City to) const {
  const City lo = std::min(from, to);
  const City hi = std::max(from, to);
  if (w < 1 || lo < w || hi > n_ || (lo == hi && lo != w)) {
    ThrowOutOfRange("V", w, from, to);
  }
  CityPath path;
  if (lo == hi) {
    path.cities = {lo};
    return path;
  }
  // D_w(lo+1, lo) walked from lo to lo+1, then straight up to hi.
  AppendD(w, lo + 1, lo, path.cities);
  std::reverse(path.cities.begin(), path.cities.end());
  for (City k = lo + 2; k <= hi; ++k) path.cities.push_back(k);
  if (from == hi) std::reverse(path.cities.begin(), path.cities.end());
  return path;
}

SolveResult PyramidalTspTour(const DistanceMatrix& matrix) {
  const auto start = std::chrono::steady_clock::now();
  const int n = matrix.size();
  if (n < 3) {
    throw DemipathError(ErrorCode::kTooSmall,
                        "a tour needs at least 3 cities, got " +
                            std::to_string(n));
  }
  const PyramidalTables tables(matrix);
  SolveResult result;
  result.length = tables.E(n, 1, 2) + tables.c(2, 1);
  result.path = tables.EPath(n, 1, 2);
  result.path.kind = PathKind::kTour;
  result.stats.pyramidal_cells = tables.cell_count();
  result.stats.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  return result;
}

}  // namespace demipath

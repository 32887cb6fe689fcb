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

#include "demipath/endpoint_one_solver.h"

#include <algorithm>
#include <cassert>
#include <chrono>
#include <cmath>
#include <string>

#include "demipath/matrix_checks.h"

namespace demipath {

namespace {

void AppendTail(const CityPath& path, std::vector<City>& out) {
  out.insert(out.end(), path.cities.begin() + 1, path.cities.end());
}

[[noreturn]] void ThrowCorrupt(const std::string& what) {
  throw DemipathError(ErrorCode::kCorruptTags, what);
}

}  // namespace

GammaLTables::GammaLTables(const PyramidalTables& tables, City t)
    : tables_(tables), n_(tables.size()), t_(t) {
  sentinel_ = 4.0 * tables.matrix().MaxAbsEntry() * n_ + 1.0;
  const std::size_t cells =
      static_cast<std::size_t>(n_ + 1) * (n_ + 1) * (n_ + 1);
  gamma_.assign(cells, sentinel_);
  gamma_tag_.assign(cells, GammaTag{});
  l_.assign(cells, sentinel_);
  l_tag_.assign(cells, LTag{});

  // Gamma(j, m, w) with m - w = d needs L cells of difference < d and vice
  // versa; the closed-form rows cover the smallest differences.
  for (int d = 2; d < n_; ++d) {
    for (City w = 2; w < t_; ++w) {
      const int m = w + d;
      if (m <= t_ || m > n_) continue;
      for (City j = 1; j < w; ++j) {
        const auto [value, tag] = EvaluateGamma(
            j, m, w, [&](City x) { return tables_.c(j, x); },
            [&](City x) { return tables_.E(m, j, x); });
        gamma_[Index(w, m, j)] = value;
        gamma_tag_[Index(w, m, j)] = tag;
        ++gamma_cells_;
      }
    }
    for (City w = 2; w < t_; ++w) {
      const int p = w + d;
      if (p <= t_ || p >= n_) continue;
      for (City k = p + 1; k <= n_; ++k) {
        const auto [value, tag] = EvaluateL(k, w, p);
        l_[Index(w, p, k)] = value;
        l_tag_[Index(w, p, k)] = tag;
        ++l_cells_;
      }
    }
  }
}

double GammaLTables::Gamma(City j, int m, City w) const {
  assert(1 <= j && j < w && w <= t_ && t_ < m && m <= n_);
  if (w == t_) return tables_.E(m, j, t_);
  return gamma_[Index(w, m, j)];
}

double GammaLTables::L(City k, City w, int p) const {
  assert(1 <= w && w < t_ && t_ <= p && p < k && k <= n_);
  if (p == t_) return tables_.D(w, k, t_);
  return l_[Index(w, p, k)];
}

GammaTag GammaLTables::GammaChoice(City j, int m, City w) const {
  if (w == t_) return {GammaCase::kClosedForm, 0, 0};
  return gamma_tag_[Index(w, m, j)];
}

LTag GammaLTables::LChoice(City k, City w, int p) const {
  if (p == t_) return {LCase::kClosedForm, 0, 0};
  return l_tag_[Index(w, p, k)];
}

template <typename DistFn, typename ERowFn>
std::pair<double, GammaTag> GammaLTables::EvaluateGamma(
    City /*j*/, int m, City w, DistFn c_from_j, ERowFn e_from_j) const {
  // Ties go to the earlier case, then to the smaller (p, k).
  double best = c_from_j(m) + L(m, w, m - 1);
  GammaTag tag{GammaCase::kPeakThenL, 0, 0};
  for (int p = t_; p <= m - 2; ++p) {
    const double head = c_from_j(p + 1);
    for (City k = p + 2; k <= m; ++k) {
      const double value = head + tables_.Lambda(m, p + 1, k) + L(k, w, p);
      if (value < best) {
        best = value;
        tag = {GammaCase::kAlphaViaPeak, static_cast<std::int16_t>(p),
               static_cast<std::int16_t>(k)};
      }
    }
  }
  for (int p = t_; p <= m - 2; ++p) {
    const double value = e_from_j(p + 1) + L(p + 1, w, p);
    if (value < best) {
      best = value;
      tag = {GammaCase::kAlphaViaE, static_cast<std::int16_t>(p), 0};
    }
  }
  return {best, tag};
}

std::pair<double, LTag> GammaLTables::EvaluateL(City k, City w, int p) const {
  double best = sentinel_;
  LTag tag;
  for (City v = w + 2; v <= t_; ++v) {
    const double value = tables_.D(w, k, v - 1) + Gamma(v - 1, p, v);
    if (value < best) {
      best = value;
      tag = {LCase::kBetaViaD, static_cast<std::int16_t>(v), 0};
    }
  }
  for (City v = w + 2; v <= t_; ++v) {
    const double head = tables_.c(k, v - 1);
    for (City j = w; j <= v - 2; ++j) {
      const double value = head + tables_.V(w, j, v - 1) + Gamma(j, p, v);
      if (value < best) {
        best = value;
        tag = {LCase::kBetaViaValley, static_cast<std::int16_t>(v),
               static_cast<std::int16_t>(j)};
      }
    }
  }
  const double value = tables_.c(k, w) + Gamma(w, p, w + 1);
  if (value < best || tag.kind == LCase::kUnset) {
    best = value;
    tag = {LCase::kValleyThenGamma, 0, 0};
  }
  return {best, tag};
}

void GammaLTables::AppendGammaTail(City j, int m, City w,
                                   std::vector<City>& out) const {
  if (w == t_) {
    AppendTail(tables_.EPath(m, j, t_), out);
    return;
  }
  const GammaTag tag = gamma_tag_[Index(w, m, j)];
  switch (tag.kind) {
    case GammaCase::kPeakThenL:
      out.push_back(m);
      AppendLTail(m, w, m - 1, out);
      return;
    case GammaCase::kAlphaViaPeak: {
      const CityPath block = tables_.LambdaPath(m, tag.p + 1, tag.k);
      out.insert(out.end(), block.cities.begin(), block.cities.end());
      AppendLTail(tag.k, w, tag.p, out);
      return;
    }
    case GammaCase::kAlphaViaE:
      AppendTail(tables_.EPath(m, j, tag.p + 1), out);
      AppendLTail(tag.p + 1, w, tag.p, out);
      return;
    case GammaCase::kUnset:
    case GammaCase::kClosedForm:
      break;
  }
  ThrowCorrupt("Gamma(" + std::to_string(j) + "," + std::to_string(m) + "," +
               std::to_string(w) + ") has no usable tag");
}

void GammaLTables::AppendLTail(City k, City w, int p,
                               std::vector<City>& out) const {
  if (p == t_) {
    AppendTail(tables_.DPath(w, k, t_), out);
    return;
  }
  const LTag tag = l_tag_[Index(w, p, k)];
  switch (tag.kind) {
    case LCase::kBetaViaD:
      AppendTail(tables_.DPath(w, k, tag.v - 1), out);
      AppendGammaTail(tag.v - 1, p, tag.v, out);
      return;
    case LCase::kBetaViaValley: {
      const CityPath block = tables_.VPath(w, tag.v - 1, tag.j);
      out.insert(out.end(), block.cities.begin(), block.cities.end());
      AppendGammaTail(tag.j, p, tag.v, out);
      return;
    }
    case LCase::kValleyThenGamma:
      out.push_back(w);
      AppendGammaTail(w, p, w + 1, out);
      return;
    case LCase::kUnset:
    case LCase::kClosedForm:
      break;
  }
  ThrowCorrupt("L(" + std::to_string(k) + "," + std::to_string(w) + "," +
               std::to_string(p) + ") has no usable tag");
}

CityPath GammaLTables::GammaPath(City j, int m, City w) const {
  if (!(1 <= j && j < w && w <= t_ && t_ < m && m <= n_)) {
    throw DemipathError(ErrorCode::kOutOfRange, "Gamma index out of range");
  }
  CityPath path;
  path.cities.push_back(j);
  AppendGammaTail(j, m, w, path.cities);
  return path;
}

CityPath GammaLTables::LPath(City k, City w, int p) const {
  if (!(1 <= w && w < t_ && t_ <= p && p < k && k <= n_)) {
    throw DemipathError(ErrorCode::kOutOfRange, "L index out of range");
  }
  CityPath path;
  path.cities.push_back(k);
  AppendLTail(k, w, p, path.cities);
  return path;
}

namespace {

City CheckedEndpoint(const DistanceMatrix& matrix, City t) {
  if (t < 2 || t > matrix.size()) {
    throw DemipathError(ErrorCode::kBadEndpoint,
                        "destination " + std::to_string(t) +
                            " outside 2.." + std::to_string(matrix.size()));
  }
  return t;
}

}  // namespace

EndpointOneSolver::EndpointOneSolver(const DistanceMatrix& matrix, City t)
    : tables_(matrix), gamma_l_(tables_, CheckedEndpoint(matrix, t)) {}

SolveResult EndpointOneSolver::Solve() const {
  const int n = tables_.size();
  std::vector<double> row(n + 1, 0.0);
  for (City x = 2; x <= n; ++x) row[x] = tables_.c(1, x);
  return SolveWithStartRow(row);
}

SolveResult EndpointOneSolver::SolveWithStartRow(
    std::span<const double> start_row) const {
  const int n = tables_.size();
  const City t = gamma_l_.t();
  if (static_cast<int>(start_row.size()) != n + 1) {
    throw DemipathError(ErrorCode::kBadIndexSet,
                        "start row must have n + 1 entries");
  }

  // E(n; 1, x) for the substituted city 1.
  std::vector<double> e1(n + 1, 0.0);
  std::vector<PyramidalTables::Choice> e1_choice(n + 1,
                                                 PyramidalTables::kBase);
  e1[n] = start_row[n];
  for (City j = n - 1; j >= 2; --j) {
    const double far = tables_.E(n, j, j + 1) + start_row[j + 1];
    const double near = e1[j + 1] + tables_.c(j + 1, j);
    if (far <= near) {
      e1[j] = far;
      e1_choice[j] = PyramidalTables::kFarEnd;
    } else {
      e1[j] = near;
      e1_choice[j] = PyramidalTables::kNearEnd;
    }
  }
  auto e1_path = [&](City j) {
    std::vector<City> suffix;
    CityPath path;
    City cur = j;
    while (cur != n && e1_choice[cur] == PyramidalTables::kNearEnd) {
      suffix.push_back(cur);
      ++cur;
    }
    if (cur == n) {
      path.cities = {1, n};
    } else {
      path = tables_.EPath(n, cur + 1, cur);
      path.cities.insert(path.cities.begin(), 1);
    }
    path.cities.insert(path.cities.end(), suffix.rbegin(), suffix.rend());
    return path;
  };
  // c_12 + ... + c_{j-1,j} with the substituted first arc.
  auto chain_from_1 = [&](City j) {
    return j >= 2 ? start_row[2] + tables_.Chain(2, j) : 0.0;
  };

  // Lambda(n; 1, t): no valley other than 1 and t.
  double best = t == 2 ? e1[2] : chain_from_1(t - 1) + tables_.E(n, t - 1, t);
  City best_j = 0;
  std::pair<double, GammaTag> gamma_from_1{0.0, {}};
  if (t < n) {
    for (City j = 1; j <= t - 2; ++j) {
      double gamma;
      if (j == 1) {
        gamma_from_1 = gamma_l_.EvaluateGamma(
            1, n, 2, [&](City x) { return start_row[x]; },
            [&](City x) { return e1[x]; });
        gamma = gamma_from_1.first;
      } else {
        gamma = gamma_l_.Gamma(j, n, j + 1);
      }
      const double value = chain_from_1(j) + gamma;
      if (value < best) {
        best = value;
        best_j = j;
      }
    }
  }

  SolveResult result;
  result.length = best;
  std::vector<City>& out = result.path.cities;
  if (best_j == 0) {
    if (t == 2) {
      out = e1_path(2).cities;
    } else {
      for (City k = 1; k <= t - 2; ++k) out.push_back(k);
      const CityPath block = tables_.EPath(n, t - 1, t);
      out.insert(out.end(), block.cities.begin(), block.cities.end());
    }
  } else if (best_j > 1) {
    for (City k = 1; k < best_j; ++k) out.push_back(k);
    const CityPath rest = gamma_l_.GammaPath(best_j, n, best_j + 1);
    out.insert(out.end(), rest.cities.begin(), rest.cities.end());
  } else {
    const GammaTag tag = gamma_from_1.second;
    switch (tag.kind) {
      case GammaCase::kPeakThenL:
        out = {1, n};
        AppendTail(gamma_l_.LPath(n, 2, n - 1), out);
        break;
      case GammaCase::kAlphaViaPeak: {
        out = {1};
        const CityPath block = tables_.LambdaPath(n, tag.p + 1, tag.k);
        out.insert(out.end(), block.cities.begin(), block.cities.end());
        AppendTail(gamma_l_.LPath(tag.k, 2, tag.p), out);
        break;
      }
      case GammaCase::kAlphaViaE:
        out = e1_path(tag.p + 1).cities;
        AppendTail(gamma_l_.LPath(tag.p + 1, 2, tag.p), out);
        break;
      case GammaCase::kUnset:
      case GammaCase::kClosedForm:
        ThrowCorrupt("Gamma(1," + std::to_string(n) + ",2) has no usable tag");
    }
  }

  result.stats.pyramidal_cells = tables_.cell_count();
  result.stats.gamma_cells = gamma_l_.gamma_cells();
  result.stats.l_cells = gamma_l_.l_cells();
  result.stats.subproblem_solves = 1;
  return result;
}

SolveResult SolveFromFirst(const DistanceMatrix& matrix, City t,
                           const SolveOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  Validate(matrix, options.tolerance);
  CheckedEndpoint(matrix, t);
  std::optional<bool> verified;
  if (options.check_class) {
    verified = IsDemidenko(matrix, options.tolerance).holds;
  }
  const EndpointOneSolver solver(matrix, t);
  SolveResult result = solver.Solve();
  result.stats.demidenko_verified = verified;
  result.stats.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  return result;
}

}  // namespace demipath

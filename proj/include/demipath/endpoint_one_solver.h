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

// Shortest Hamiltonian path from city 1 to city t on a Demidenko matrix in
// O(n^5) time.
//
// The dynamic program ranges over paths that start with the increasing chain
// 1..j, then alternate lambda-pyramidal blocks (peaks decreasing) and
// nu-pyramidal blocks (valleys increasing) until they reach t. Two families
// of partial paths carry the recursion, both ending at t:
//
//   Gamma(j, m, w), j < w <= t < m:
//     starts at j, visits {j} + [w, m], first peak m, next valley w.
//   L(k, w, p), w < t <= p < k:
//     starts at k, visits [w, p] + {k}, first valley w, next peak p.
//
// Rows Gamma(j, m, t) = E(m; j, t) and L(k, w, t) = D(w; k, t) are closed
// forms read from the pyramidal tables. Every other cell is the minimum over
// a fixed list of cases (see GammaCase / LCase) whose inputs have a strictly
// smaller peak-valley difference, so cells are filled in increasing order of
// that difference.

#ifndef DEMIPATH_ENDPOINT_ONE_SOLVER_H_
#define DEMIPATH_ENDPOINT_ONE_SOLVER_H_

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "demipath/city_path.h"
#include "demipath/distance_matrix.h"
#include "demipath/pyramidal_tables.h"
#include "demipath/solve_result.h"

namespace demipath {

enum class GammaCase : std::uint8_t {
  kUnset,
  kClosedForm,    // w == t: E(m; j, t)
  kPeakThenL,     // c(j, m) + L(m, w, m-1)
  kAlphaViaPeak,  // c(j, p+1) + Lambda(m; k, p+1) + L(k, w, p)
  kAlphaViaE,     // E(m; j, p+1) + L(p+1, w, p)
};

enum class LCase : std::uint8_t {
  kUnset,
  kClosedForm,       // p == t: D(w; k, t)
  kBetaViaD,         // D(w; k, v-1) + Gamma(v-1, p, v)
  kBetaViaValley,    // c(k, v-1) + V(w; j, v-1) + Gamma(j, p, v)
  kValleyThenGamma,  // c(k, w) + Gamma(w, p, w+1)
};

struct GammaTag {
  GammaCase kind = GammaCase::kUnset;
  std::int16_t p = 0;
  std::int16_t k = 0;
};

struct LTag {
  LCase kind = LCase::kUnset;
  std::int16_t v = 0;
  std::int16_t j = 0;
};

// Gamma and L for one destination t over a fixed set of pyramidal tables.
// Keeps a reference to `tables`, which must outlive this object.
class GammaLTables {
 public:
  GammaLTables(const PyramidalTables& tables, City t);

  GammaLTables(const GammaLTables&) = delete;
  GammaLTables& operator=(const GammaLTables&) = delete;

  City t() const { return t_; }
  int size() const { return n_; }

  // Domain j < w <= t < m <= n (Gamma) and w < t <= p < k <= n, w >= 2 (L).
  double Gamma(City j, int m, City w) const;
  double L(City k, City w, int p) const;
  GammaTag GammaChoice(City j, int m, City w) const;
  LTag LChoice(City k, City w, int p) const;

  // Paths from j (resp. k) to t realising the cell value.
  CityPath GammaPath(City j, int m, City w) const;
  CityPath LPath(City k, City w, int p) const;

  std::size_t gamma_cells() const { return gamma_cells_; }
  std::size_t l_cells() const { return l_cells_; }

  // Finite stand-in for "no candidate" that exceeds any path length.
  double sentinel() const { return sentinel_; }

  const PyramidalTables& tables() const { return tables_; }

 private:
  friend class EndpointOneSolver;

  // Evaluates Gamma(j, m, w) for w < t with the distances out of j supplied
  // by `c_from_j(x)` and the E(m; j, x) row by `e_from_j(x)`. Used for the
  // table itself and for start cities that are not in the matrix.
  template <typename DistFn, typename ERowFn>
  std::pair<double, GammaTag> EvaluateGamma(City j, int m, City w,
                                            DistFn c_from_j,
                                            ERowFn e_from_j) const;

  std::size_t Index(int a, int b, int c) const {
    return (static_cast<std::size_t>(a) * (n_ + 1) + b) * (n_ + 1) + c;
  }
  std::pair<double, LTag> EvaluateL(City k, City w, int p) const;
  void AppendGammaTail(City j, int m, City w, std::vector<City>& out) const;
  void AppendLTail(City k, City w, int p, std::vector<City>& out) const;

  const PyramidalTables& tables_;
  int n_;
  City t_;
  double sentinel_;
  // Gamma stored at (w, m, j); L stored at (w, p, k).
  std::vector<double> gamma_;
  std::vector<GammaTag> gamma_tag_;
  std::vector<double> l_;
  std::vector<LTag> l_tag_;
  std::size_t gamma_cells_ = 0;
  std::size_t l_cells_ = 0;
};

// Owns the pyramidal tables and Gamma/L for one (matrix, t) pair and answers
// (1, t) queries, optionally with city 1's distances replaced.
class EndpointOneSolver {
 public:
  // Throws kBadEndpoint unless 2 <= t <= n.
  EndpointOneSolver(const DistanceMatrix& matrix, City t);

  EndpointOneSolver(const EndpointOneSolver&) = delete;
  EndpointOneSolver& operator=(const EndpointOneSolver&) = delete;

  const PyramidalTables& tables() const { return tables_; }
  const GammaLTables& gamma_l() const { return gamma_l_; }

  SolveResult Solve() const;

  // Solves as if city 1 had distance start_row[x] to every city x in 2..n
  // (start_row.size() == n + 1; entries 0 and 1 are ignored). No table cell
  // away from city 1 depends on these distances, so one instance serves any
  // number of start rows at O(n^2) each.
  SolveResult SolveWithStartRow(std::span<const double> start_row) const;

 private:
  PyramidalTables tables_;
  GammaLTables gamma_l_;
};

// H(1, t): validates, optionally checks the Demidenko property, and solves.
// Returns <1, 2, ..., n> for t == n. Throws kBadEndpoint for t < 2 or t > n.
SolveResult SolveFromFirst(const DistanceMatrix& matrix, City t,
                           const SolveOptions& options = {});

}  // namespace demipath

#endif  // DEMIPATH_ENDPOINT_ONE_SOLVER_H_

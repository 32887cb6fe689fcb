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

// Lengths of shortest lambda- and nu-pyramidal paths over the index ranges
// used by the path solvers. All arguments are 1-based city labels and every
// quantity is symmetric in its two endpoint arguments.
//
//   E(m, i, j), i < j <= m:  lambda-pyramidal i..j path on {i} + [j, m]
//   D(w, i, j), w <= j < i:  nu-pyramidal i..j path on [w, j] + {i}
//   Lambda(m, i, p), i < p <= m:  lambda-pyramidal i..p path on [i, m]
//   V(w, j, q), w <= j < q:  nu-pyramidal j..q path on [w, q]
//
// Lambda(m, m, m) and V(w, w, w) are 0 (single-city path).
//
// A lambda-pyramidal path rises to a single peak and then falls; a
// nu-pyramidal path falls to a single valley and then rises.

#ifndef DEMIPATH_PYRAMIDAL_TABLES_H_
#define DEMIPATH_PYRAMIDAL_TABLES_H_

#include <cstddef>
#include <cstdint>
#include <vector>

#include "demipath/city_path.h"
#include "demipath/distance_matrix.h"
#include "demipath/solve_result.h"

namespace demipath {

class PyramidalTables {
 public:
  // Which recursion branch attained an E or D cell. On ties the first branch
  // (attach the next city at the far end) wins.
  enum Choice : std::uint8_t { kBase = 0, kFarEnd = 1, kNearEnd = 2 };

  // O(n^3) time and memory. The matrix is copied.
  explicit PyramidalTables(const DistanceMatrix& matrix);

  int size() const { return n_; }
  const DistanceMatrix& matrix() const { return matrix_; }

  // c(i, j) with 1-based labels.
  double c(City i, City j) const { return matrix_(i - 1, j - 1); }

  double E(int m, City i, City j) const;
  double D(int w, City i, City j) const;
  double Lambda(int m, City i, City p) const;
  double V(int w, City j, City q) const;

  Choice EChoice(int m, City i, City j) const;
  Choice DChoice(int w, City i, City j) const;

  // c_{i,i+1} + ... + c_{p-1,p}; 0 when i >= p.
  double Chain(City i, City p) const {
    return i >= p ? 0.0 : prefix_[p] - prefix_[i];
  }

  // Paths realising the table values, oriented from `from` to `to`. Throw
  // kOutOfRange when the indices are outside the table's domain.
  CityPath EPath(int m, City from, City to) const;
  CityPath DPath(int w, City from, City to) const;
  CityPath LambdaPath(int m, City from, City to) const;
  CityPath VPath(int w, City from, City to) const;

  std::size_t cell_count() const { return 4 * e_.size(); }

 private:
  std::size_t Index(int a, int b, int c) const {
    return (static_cast<std::size_t>(a) * (n_ + 1) + b) * (n_ + 1) + c;
  }

  void BuildE();
  void BuildD();
  void BuildLambdaV();

  void AppendE(int m, City i, City j, std::vector<City>& out) const;
  void AppendD(int w, City i, City j, std::vector<City>& out) const;

  DistanceMatrix matrix_;
  int n_;
  std::vector<double> prefix_;  // prefix_[k] = Chain(1, k)
  // Dense (n+1)^3 storage indexed by (outer subscript, smaller/larger pair).
  std::vector<double> e_;        // (m, i, j), i < j
  std::vector<double> d_;        // (w, i, j), i > j
  std::vector<double> lambda_;   // (m, i, p), i <= p
  std::vector<double> v_;        // (w, j, q), j <= q
  std::vector<Choice> e_choice_;
  std::vector<Choice> d_choice_;
};

// Shortest pyramidal TSP tour, length E(n; 1, 2) + c_21, starting at city 1.
// Globally optimal on Demidenko matrices. Throws kTooSmall for n < 3.
SolveResult PyramidalTspTour(const DistanceMatrix& matrix);

}  // namespace demipath

#endif  // DEMIPATH_PYRAMIDAL_TABLES_H_

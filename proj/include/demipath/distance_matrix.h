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

// Symmetric distance matrices and the structural transforms that preserve the
// Demidenko and Kalmanson properties (reversal, principal submatrices,
// constant shifts).
//
// Storage is 0-based: operator()(i, j) addresses row i, column j. Everything
// that crosses the library boundary as a "city" (paths, witnesses, labels,
// index sets) is 1-based.

#ifndef DEMIPATH_DISTANCE_MATRIX_H_
#define DEMIPATH_DISTANCE_MATRIX_H_

#include <span>
#include <utility>
#include <vector>

#include "demipath/errors.h"

namespace demipath {

inline constexpr double kDefaultTolerance = 1e-9;

struct Point {
  double x = 0.0;
  double y = 0.0;
};

class DistanceMatrix {
 public:
  // An n x n matrix of zeros with labels 1..n.
  explicit DistanceMatrix(int n);

  // Takes ownership of row-major entries. Throws kBadIndexSet when the entry
  // count is not a perfect square of a positive size.
  static DistanceMatrix FromRowMajor(int n, std::vector<double> entries);
  static DistanceMatrix FromRows(const std::vector<std::vector<double>>& rows);

  int size() const { return n_; }

  double operator()(int i, int j) const { return entries_[i * n_ + j]; }
  double& operator()(int i, int j) { return entries_[i * n_ + j]; }

  // Sets both (i, j) and (j, i).
  void SetSymmetric(int i, int j, double value);

  std::span<const double> row(int i) const {
    return {entries_.data() + static_cast<std::size_t>(i) * n_,
            static_cast<std::size_t>(n_)};
  }
  const std::vector<double>& entries() const { return entries_; }

  // Original 1-based city indices; 1..n unless the matrix was produced by
  // PrincipalSubmatrix().
  const std::vector<int>& labels() const { return labels_; }
  void set_labels(std::vector<int> labels);

  // Largest |c_ij| over off-diagonal entries.
  double MaxAbsEntry() const;

  // Compares entries only; labels are provenance metadata.
  friend bool operator==(const DistanceMatrix& a, const DistanceMatrix& b) {
    return a.n_ == b.n_ && a.entries_ == b.entries_;
  }

 private:
  int n_;
  std::vector<double> entries_;
  std::vector<int> labels_;
};

// Throws AsymmetricMatrixError for the first (row-major, i < j) pair whose
// entries differ by more than `tolerance`, and kTooSmall when n < 2.
void Validate(const DistanceMatrix& matrix,
              double tolerance = kDefaultTolerance);

// d_ij = c_{n+1-i, n+1-j}. Labels are reversed along with the rows.
DistanceMatrix Reverse(const DistanceMatrix& matrix);

// Restriction to the 1-based, strictly increasing index set `keep`. Labels of
// the result are the input labels of the kept rows.
DistanceMatrix PrincipalSubmatrix(const DistanceMatrix& matrix,
                                  std::span<const int> keep);

// Adds `constant` to every off-diagonal entry.
DistanceMatrix Shift(const DistanceMatrix& matrix, double constant);

DistanceMatrix EuclideanFromPoints(std::span<const Point> points);

}  // namespace demipath

#endif  // DEMIPATH_DISTANCE_MATRIX_H_

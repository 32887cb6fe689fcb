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

#include "demipath/distance_matrix.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace demipath {

const char* ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kAsymmetricMatrix:
      return "AsymmetricMatrix";
    case ErrorCode::kTooSmall:
      return "TooSmall";
    case ErrorCode::kTooLarge:
      return "TooLarge";
    case ErrorCode::kBadIndexSet:
      return "BadIndexSet";
    case ErrorCode::kOutOfRange:
      return "OutOfRange";
    case ErrorCode::kInvalidCity:
      return "InvalidCity";
    case ErrorCode::kDuplicateCity:
      return "DuplicateCity";
    case ErrorCode::kNotAForbiddenPair:
      return "NotAForbiddenPair";
    case ErrorCode::kBadEndpoint:
      return "BadEndpoint";
    case ErrorCode::kCorruptTags:
      return "CorruptTags";
    case ErrorCode::kNoFeasibleJunction:
      return "NoFeasibleJunction";
    case ErrorCode::kJunctionMismatch:
      return "JunctionMismatch";
    case ErrorCode::kRetryBudgetExhausted:
      return "RetryBudgetExhausted";
    case ErrorCode::kParseError:
      return "ParseError";
  }
  return "Unknown";
}

AsymmetricMatrixError::AsymmetricMatrixError(int i, int j, double delta)
    : DemipathError(ErrorCode::kAsymmetricMatrix,
                    "asymmetric matrix: |c(" + std::to_string(i) + "," +
                        std::to_string(j) + ") - c(" + std::to_string(j) +
                        "," + std::to_string(i) +
                        ")| = " + std::to_string(delta)),
      i_(i),
      j_(j),
      delta_(delta) {}

DistanceMatrix::DistanceMatrix(int n)
    : n_(n), entries_(static_cast<std::size_t>(std::max(n, 0)) * std::max(n, 0)) {
  if (n < 0) {
    throw DemipathError(ErrorCode::kTooSmall, "negative matrix size");
  }
  labels_.resize(n);
  std::iota(labels_.begin(), labels_.end(), 1);
}

DistanceMatrix DistanceMatrix::FromRowMajor(int n, std::vector<double> entries) {
  if (n < 0 || entries.size() != static_cast<std::size_t>(n) * n) {
    throw DemipathError(ErrorCode::kBadIndexSet,
                        "entry count does not match an n x n matrix");
  }
  DistanceMatrix matrix(n);
  matrix.entries_ = std::move(entries);
  return matrix;
}

DistanceMatrix DistanceMatrix::FromRows(
    const std::vector<std::vector<double>>& rows) {
  const int n = static_cast<int>(rows.size());
  DistanceMatrix matrix(n);
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(rows[i].size()) != n) {
      throw DemipathError(ErrorCode::kBadIndexSet,
                          "row " + std::to_string(i + 1) + " has " +
                              std::to_string(rows[i].size()) +
                              " entries, expected " + std::to_string(n));
    }
    std::copy(rows[i].begin(), rows[i].end(),
              matrix.entries_.begin() + static_cast<std::ptrdiff_t>(i) * n);
  }
  return matrix;
}

void DistanceMatrix::SetSymmetric(int i, int j, double value) {
  (*this)(i, j) = value;
  (*this)(j, i) = value;
}

void DistanceMatrix::set_labels(std::vector<int> labels) {
  if (static_cast<int>(labels.size()) != n_ ||
      std::adjacent_find(labels.begin(), labels.end(),
                         std::greater_equal<>()) != labels.end()) {
    throw DemipathError(ErrorCode::kBadIndexSet,
                        "labels must be strictly increasing, one per row");
  }
  labels_ = std::move(labels);
}

double DistanceMatrix::MaxAbsEntry() const {
  double best = 0.0;
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < n_; ++j) {
      if (i != j) best = std::max(best, std::abs((*this)(i, j)));
    }
  }
  return best;
}

void Validate(const DistanceMatrix& matrix, double tolerance) {
  const int n = matrix.size();
  if (n < 2) {
    throw DemipathError(ErrorCode::kTooSmall,
                        "need at least 2 cities, got " + std::to_string(n));
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const double delta = std::abs(matrix(i, j) - matrix(j, i));
      // Written so that NaN entries also fail.
      if (!(delta <= tolerance)) {
        throw AsymmetricMatrixError(i + 1, j + 1, delta);
      }
    }
  }
}

DistanceMatrix Reverse(const DistanceMatrix& matrix) {
  const int n = matrix.size();
  DistanceMatrix reversed(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      reversed(i, j) = matrix(n - 1 - i, n - 1 - j);
    }
  }
  // Labels must stay increasing, so a reversed matrix is relabeled 1..n.
  return reversed;
}

DistanceMatrix PrincipalSubmatrix(const DistanceMatrix& matrix,
                                  std::span<const int> keep) {
  const int n = matrix.size();
  const int k = static_cast<int>(keep.size());
  if (k < 2 || k > n) {
    throw DemipathError(ErrorCode::kBadIndexSet,
                        "index set size must lie in 2..n");
  }
  for (int a = 0; a < k; ++a) {
    if (keep[a] < 1 || keep[a] > n || (a > 0 && keep[a] <= keep[a - 1])) {
      throw DemipathError(ErrorCode::kBadIndexSet,
                          "index set must be strictly increasing within 1..n");
    }
  }
  DistanceMatrix sub(k);
  std::vector<int> labels(k);
  for (int a = 0; a < k; ++a) {
    labels[a] = matrix.labels()[keep[a] - 1];
    for (int b = 0; b < k; ++b) {
      sub(a, b) = matrix(keep[a] - 1, keep[b] - 1);
    }
  }
  sub.set_labels(std::move(labels));
  return sub;
}

DistanceMatrix Shift(const DistanceMatrix& matrix, double constant) {
  DistanceMatrix shifted = matrix;
  const int n = matrix.size();
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i != j) shifted(i, j) += constant;
    }
  }
  return shifted;
}

DistanceMatrix EuclideanFromPoints(std::span<const Point> points) {
  const int n = static_cast<int>(points.size());
  if (n < 2) {
    throw DemipathError(ErrorCode::kTooSmall,
                        "need at least 2 points, got " + std::to_string(n));
  }
  DistanceMatrix matrix(n);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      matrix.SetSymmetric(
          i, j, std::hypot(points[i].x - points[j].x, points[i].y - points[j].y));
    }
  }
  return matrix;
}

}  // namespace demipath

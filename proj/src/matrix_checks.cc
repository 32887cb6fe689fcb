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

#include "demipath/matrix_checks.h"

namespace demipath {

const char* InequalityName(Inequality inequality) {
  switch (inequality) {
    case Inequality::kNone:
      return "none";
    case Inequality::kDemidenko:
      return "demidenko";
    case Inequality::kKalmanson1:
      return "kalmanson-1";
    case Inequality::kKalmanson2:
      return "kalmanson-2";
  }
  return "unknown";
}

std::string CheckReport::WitnessString() const {
  if (!witness) return "";
  const auto& w = *witness;
  return "(" + std::to_string(w[0]) + "," + std::to_string(w[1]) + "," +
         std::to_string(w[2]) + "," + std::to_string(w[3]) + ")";
}

namespace {

CheckReport Scan(const DistanceMatrix& c, double tolerance, bool kalmanson) {
  const int n = c.size();
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      for (int k = j + 1; k < n; ++k) {
        for (int l = k + 1; l < n; ++l) {
          const double diagonals = c(j, l) + c(i, k);
          const double first = diagonals - (c(i, j) + c(k, l));
          if (first < -tolerance) {
            return {false, std::array{i + 1, j + 1, k + 1, l + 1},
                    kalmanson ? Inequality::kKalmanson1 : Inequality::kDemidenko,
                    first};
          }
          if (!kalmanson) continue;
          const double second = diagonals - (c(i, l) + c(j, k));
          if (second < -tolerance) {
            return {false, std::array{i + 1, j + 1, k + 1, l + 1},
                    Inequality::kKalmanson2, second};
          }
        }
      }
    }
  }
  return {};
}

}  // namespace

CheckReport IsDemidenko(const DistanceMatrix& matrix, double tolerance) {
  return Scan(matrix, tolerance, /*kalmanson=*/false);
}

CheckReport IsKalmanson(const DistanceMatrix& matrix, double tolerance) {
  return Scan(matrix, tolerance, /*kalmanson=*/true);
}

}  // namespace demipath

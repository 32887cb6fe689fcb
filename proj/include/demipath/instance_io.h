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

// Instance files. Three formats are read, detected from the first token:
//
//   matrix   "n" on the first line, then n rows of n numbers.
//   points   "points n", then n lines "x y"; Euclidean distances.
//   TSPLIB   "KEY : value" header lines followed by NODE_COORD_SECTION
//            (EDGE_WEIGHT_TYPE EUC_2D, distances rounded to the nearest
//            integer as TSPLIB prescribes) or EDGE_WEIGHT_SECTION
//            (EXPLICIT with FULL_MATRIX). The file may end with EOF.
//
// Writers print the shortest decimal form of each number that reads back
// bit-identical. Reading does not check symmetry; call Validate().

#ifndef DEMIPATH_INSTANCE_IO_H_
#define DEMIPATH_INSTANCE_IO_H_

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "demipath/distance_matrix.h"

namespace demipath {

struct Instance {
  DistanceMatrix matrix{2};
  // Set for point-based formats.
  std::optional<std::vector<Point>> points;
};

// Throws kParseError with a line number on malformed input.
Instance ReadInstance(std::istream& in);
Instance ReadInstanceFile(const std::string& path);

void WriteMatrix(std::ostream& out, const DistanceMatrix& matrix);
void WritePoints(std::ostream& out, const std::vector<Point>& points);

// Shortest representation that parses back to the same double.
std::string FormatNumber(double value);

}  // namespace demipath

#endif  // DEMIPATH_INSTANCE_IO_H_

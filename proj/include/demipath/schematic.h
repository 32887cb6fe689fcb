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

#ifndef DEMIPATH_SCHEMATIC_H_
#define DEMIPATH_SCHEMATIC_H_

#include <iosfwd>
#include <string>

#include "demipath/city_path.h"

namespace demipath {

// SVG of the path on an n x n grid: the i-th visited city c sits at column
// i, row c (row 1 at the bottom), consecutive cities are joined, peaks are
// filled red and valleys blue.
void WriteSchematicSvg(std::ostream& out, const CityPath& path,
                       const std::string& title = "");

}  // namespace demipath

#endif  // DEMIPATH_SCHEMATIC_H_

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

#include "demipath/schematic.h"

#include <algorithm>
#include <ostream>
#include <vector>

namespace demipath {

namespace {

constexpr int kCell = 32;
constexpr int kMargin = 40;

std::string Escape(const std::string& text) {
  std::string out;
  for (char c : text) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace

void WriteSchematicSvg(std::ostream& out, const CityPath& path,
                       const std::string& title) {
  const int n = path.size();
  // A tour returns to its first city one column past the last.
  const int columns = path.kind == PathKind::kTour ? n + 1 : n;
  const int width = 2 * kMargin + (columns - 1) * kCell;
  const int height = 2 * kMargin + (n - 1) * kCell;
  auto x_of = [](int position) { return kMargin + position * kCell; };
  auto y_of = [&](City c) { return kMargin + (n - c) * kCell; };

  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width
      << "\" height=\"" << height << "\" viewBox=\"0 0 " << width << ' '
      << height << "\">\n";
  if (!title.empty()) out << "  <title>" << Escape(title) << "</title>\n";
  out << "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  out << "  <g stroke=\"#d0d0d0\" stroke-width=\"1\">\n";
  for (int k = 0; k < columns; ++k) {
    out << "    <line x1=\"" << x_of(k) << "\" y1=\"" << y_of(n) << "\" x2=\""
        << x_of(k) << "\" y2=\"" << y_of(1) << "\"/>\n";
  }
  for (City c = 1; c <= n; ++c) {
    out << "    <line x1=\"" << x_of(0) << "\" y1=\"" << y_of(c) << "\" x2=\""
        << x_of(columns - 1) << "\" y2=\"" << y_of(c) << "\"/>\n";
  }
  out << "  </g>\n";

  out << "  <polyline fill=\"none\" stroke=\"black\" stroke-width=\"2\" "
         "points=\"";
  for (int k = 0; k < n; ++k) {
    out << (k == 0 ? "" : " ") << x_of(k) << ',' << y_of(path.cities[k]);
  }
  if (path.kind == PathKind::kTour && n > 0) {
    out << ' ' << x_of(n) << ',' << y_of(path.cities[0]);
  }
  out << "\"/>\n";

  const PathShape shape = n >= 2 ? AnalyzeShape(path) : PathShape{};
  std::vector<const char*> fill(n, "white");
  for (const ShapePoint& p : shape.peaks) fill[p.position] = "#d62728";
  for (const ShapePoint& v : shape.valleys) fill[v.position] = "#1f77b4";
  out << "  <g stroke=\"black\" font-family=\"sans-serif\" font-size=\"11\">\n";
  for (int k = 0; k < n; ++k) {
    const City c = path.cities[k];
    out << "    <circle cx=\"" << x_of(k) << "\" cy=\"" << y_of(c)
        << "\" r=\"9\" fill=\"" << fill[k] << "\"/>\n";
    out << "    <text x=\"" << x_of(k) << "\" y=\"" << y_of(c) + 4
        << "\" text-anchor=\"middle\" stroke=\"none\">" << c << "</text>\n";
  }
  out << "  </g>\n</svg>\n";
}

}  // namespace demipath

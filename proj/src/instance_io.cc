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

#include "demipath/instance_io.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>

namespace demipath {

namespace {

// Whitespace tokenizer that remembers line numbers for error messages.
class Tokens {
 public:
  explicit Tokens(std::istream& in) {
    std::string line;
    int number = 0;
    while (std::getline(in, line)) {
      ++number;
      lines_.push_back(line);
      std::istringstream words(line);
      std::string word;
      while (words >> word) tokens_.push_back({word, number});
    }
  }

  bool done() const { return next_ >= tokens_.size(); }
  int line() const {
    return done() ? static_cast<int>(lines_.size()) : tokens_[next_].line;
  }
  const std::string& Peek() const { return tokens_[next_].text; }

  std::string Word() {
    if (done()) Fail("unexpected end of input");
    return tokens_[next_++].text;
  }

  double Number() {
    const int at = line();
    const std::string word = Word();
    double value = 0.0;
    const char* end = word.data() + word.size();
    const auto [ptr, ec] = std::from_chars(word.data(), end, value);
    if (ec != std::errc() || ptr != end || !std::isfinite(value)) {
      Fail("expected a finite number, got '" + word + "'", at);
    }
    return value;
  }

  int Count() {
    const int at = line();
    const double value = Number();
    if (value != std::floor(value) || value < 2 || value > 1e6) {
      Fail("expected a city count >= 2", at);
    }
    return static_cast<int>(value);
  }

  // Skips tokens up to the end of the current line.
  std::string RestOfLine() {
    std::string rest;
    const int at = line();
    while (!done() && tokens_[next_].line == at) {
      if (!rest.empty()) rest += ' ';
      rest += tokens_[next_++].text;
    }
    return rest;
  }

  [[noreturn]] void Fail(const std::string& what, int at = -1) const {
    throw DemipathError(ErrorCode::kParseError,
                        "line " + std::to_string(at < 0 ? line() : at) + ": " +
                            what);
  }

 private:
  struct Token {
    std::string text;
    int line;
  };
  std::vector<std::string> lines_;
  std::vector<Token> tokens_;
  std::size_t next_ = 0;
};

void ExpectEnd(Tokens& tokens) {
  if (!tokens.done() && tokens.Peek() != "EOF") {
    tokens.Fail("unexpected trailing token '" + tokens.Peek() + "'");
  }
}

Instance ReadMatrix(Tokens& tokens) {
  const int n = tokens.Count();
  std::vector<double> entries(static_cast<std::size_t>(n) * n);
  for (double& e : entries) e = tokens.Number();
  ExpectEnd(tokens);
  return {DistanceMatrix::FromRowMajor(n, std::move(entries)), std::nullopt};
}

std::vector<Point> ReadPointRows(Tokens& tokens, int n, bool indexed) {
  std::vector<Point> points(n);
  for (int i = 0; i < n; ++i) {
    if (indexed) {
      const int at = tokens.line();
      if (tokens.Number() != i + 1) tokens.Fail("nodes must be numbered 1..n", at);
    }
    points[i].x = tokens.Number();
    points[i].y = tokens.Number();
  }
  return points;
}

Instance ReadPoints(Tokens& tokens) {
  tokens.Word();  // "points"
  const int n = tokens.Count();
  std::vector<Point> points = ReadPointRows(tokens, n, false);
  ExpectEnd(tokens);
  Instance instance{EuclideanFromPoints(points), std::move(points)};
  return instance;
}

Instance ReadTsplib(Tokens& tokens) {
  std::map<std::string, std::string> header;
  while (!tokens.done()) {
    std::string key = tokens.Word();
    if (key == "NODE_COORD_SECTION" || key == "EDGE_WEIGHT_SECTION") {
      const auto dim = header.find("DIMENSION");
      if (dim == header.end()) tokens.Fail("DIMENSION missing");
      std::istringstream dim_in(dim->second);
      Tokens dim_tokens(dim_in);
      const int n = dim_tokens.Count();
      const std::string type = header["EDGE_WEIGHT_TYPE"];
      if (key == "NODE_COORD_SECTION") {
        if (type != "EUC_2D") tokens.Fail("only EUC_2D coordinates supported");
        std::vector<Point> points = ReadPointRows(tokens, n, true);
        ExpectEnd(tokens);
        DistanceMatrix m(n);
        for (int i = 0; i < n; ++i) {
          for (int j = i + 1; j < n; ++j) {
            const double d = std::hypot(points[i].x - points[j].x,
                                        points[i].y - points[j].y);
            m.SetSymmetric(i, j, std::floor(d + 0.5));
          }
        }
        return {std::move(m), std::move(points)};
      }
      if (type != "EXPLICIT" || header["EDGE_WEIGHT_FORMAT"] != "FULL_MATRIX") {
        tokens.Fail("only EXPLICIT FULL_MATRIX weights supported");
      }
      std::vector<double> entries(static_cast<std::size_t>(n) * n);
      for (double& e : entries) e = tokens.Number();
      ExpectEnd(tokens);
      return {DistanceMatrix::FromRowMajor(n, std::move(entries)), std::nullopt};
    }
    // "KEY : value", "KEY: value" or "KEY :value".
    std::string value = tokens.RestOfLine();
    if (!key.empty() && key.back() == ':') key.pop_back();
    if (!value.empty() && value.front() == ':') value.erase(0, 1);
    value.erase(0, value.find_first_not_of(' '));
    header[key] = value;
  }
  tokens.Fail("no NODE_COORD_SECTION or EDGE_WEIGHT_SECTION");
}

}  // namespace

Instance ReadInstance(std::istream& in) {
  Tokens tokens(in);
  if (tokens.done()) tokens.Fail("empty instance");
  const std::string& first = tokens.Peek();
  if (first == "points") return ReadPoints(tokens);
  if (std::isdigit(static_cast<unsigned char>(first[0]))) {
    return ReadMatrix(tokens);
  }
  return ReadTsplib(tokens);
}

Instance ReadInstanceFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw DemipathError(ErrorCode::kParseError, "cannot open " + path);
  }
  return ReadInstance(in);
}

std::string FormatNumber(double value) {
  char buffer[32];
  const auto [ptr, ec] = std::to_chars(buffer, buffer + sizeof(buffer), value);
  return std::string(buffer, ec == std::errc() ? ptr : buffer);
}

void WriteMatrix(std::ostream& out, const DistanceMatrix& matrix) {
  const int n = matrix.size();
  out << n << '\n';
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      out << (j == 0 ? "" : " ") << FormatNumber(matrix(i, j));
    }
    out << '\n';
  }
}

void WritePoints(std::ostream& out, const std::vector<Point>& points) {
  out << "points " << points.size() << '\n';
  for (const Point& p : points) {
    out << FormatNumber(p.x) << ' ' << FormatNumber(p.y) << '\n';
  }
}

}  // namespace demipath

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

// Acceptance gate. Prints one PASS/FAIL line per criterion and exits
// nonzero if any criterion fails. All tolerances and budgets live below.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "demipath/city_path.h"
#include "demipath/endpoint_one_solver.h"
#include "demipath/generators.h"
#include "demipath/matrix_checks.h"
#include "demipath/oracle.h"
#include "demipath/path_solver.h"
#include "demipath/pyramidal_tables.h"
#include "demipath/rng.h"

namespace demipath {
namespace {

constexpr double kFixtureTolerance = 1e-9;
constexpr double kEuclideanRelative = 1e-6;
constexpr double kLawTolerance = 1e-9;
constexpr double kFig3Seconds = 1.0;
constexpr double kFig1Seconds = 30.0;
constexpr double kClassSeconds = 1.0;
constexpr double kSweepSeconds = 600.0;
constexpr double kLargeSolveSeconds = 60.0;
constexpr double kMaxFittedExponent = 6.5;
constexpr int kSweepPerSize = 25;
constexpr int kUncrossPaths = 1000;
constexpr std::uint64_t kSeed = 20260101;

using Clock = std::chrono::steady_clock;

double Since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Outcome {
  bool pass = true;
  std::string detail;

  void Fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

bool Near(double a, double b, bool exact) {
  return exact ? a == b
               : std::abs(a - b) <= kEuclideanRelative * std::max(1.0, std::abs(b));
}

std::uint64_t InstanceSeed(int n, int index) {
  return SplitMix64(kSeed ^ (static_cast<std::uint64_t>(n) << 40) ^
                    static_cast<std::uint64_t>(index))
      .Next();
}

struct SweepInstance {
  std::string label;
  DistanceMatrix matrix;
  bool exact;
};

// The seeded Demidenko sweep shared by several criteria.
std::vector<SweepInstance> Sweep(int lo, int hi, int per_size) {
  std::vector<SweepInstance> out;
  for (Family f : {Family::kBanded, Family::kConvexPolygon,
                   Family::kTreeKalmanson, Family::kPerturbed}) {
    const int min_n = f == Family::kPerturbed       ? 4
                      : f == Family::kConvexPolygon ? 3
                                                    : 2;
    for (int n = std::max(lo, min_n); n <= hi; ++n) {
      for (int i = 0; i < per_size; ++i) {
        const std::uint64_t seed = InstanceSeed(n, i);
        out.push_back({std::string(FamilyName(f)) + " n=" + std::to_string(n) +
                           " seed=" + std::to_string(seed),
                       Generate(f, n, seed), f != Family::kConvexPolygon});
      }
    }
  }
  return out;
}

DistanceMatrix Fixture(const char* name) {
  return EuclideanFromPoints(*FixturePoints(name));
}

Outcome Fig3Path() {
  Outcome o;
  const auto start = Clock::now();
  const DistanceMatrix m = Fixture("fig3");
  const CityPath reference{{5, 6, 4, 2, 1, 3, 8, 9, 11, 12, 10, 7}};
  const SolveResult r = Solve(m, 5, 7);
  const double seconds = Since(start);
  const double expected = PathLength(m, reference);
  std::ostringstream s;
  s << "length " << r.length << " reference " << expected << " in " << seconds
    << " s";
  o.detail = s.str();
  if (std::abs(r.length - expected) > kFixtureTolerance) o.Fail(o.detail);
  if (!IsSpanningPath(r.path, 12, 5, 7)) o.Fail("invalid path " + r.path.ToString());
  if (seconds >= kFig3Seconds) o.Fail("too slow: " + o.detail);
  return o;
}

Outcome Fig1Oracle() {
  Outcome o;
  const auto start = Clock::now();
  const DistanceMatrix m = Fixture("fig1");
  const SolveResult r = Solve(m, 1, 11);
  const SolveResult oracle = HeldKarpPath(m, 1, 11);
  const double seconds = Since(start);
  std::ostringstream s;
  s << "n=" << m.size() << " solver " << r.length << " oracle " << oracle.length
    << " in " << seconds << " s";
  o.detail = s.str();
  if (std::abs(r.length - oracle.length) > kFixtureTolerance) o.Fail(o.detail);
  if (seconds >= kFig1Seconds) o.Fail("too slow: " + o.detail);
  return o;
}

Outcome ClassChecks() {
  Outcome o;
  const auto start = Clock::now();
  const DistanceMatrix fig3 = Fixture("fig3");
  const DistanceMatrix fig1 = Fixture("fig1");
  const bool fig3_demidenko = IsDemidenko(fig3).holds;
  const CheckReport fig3_kalmanson = IsKalmanson(fig3);
  const bool fig1_kalmanson = IsKalmanson(fig1).holds;
  const double seconds = Since(start);
  o.detail = "fig3 demidenko yes, kalmanson no (witness " +
             fig3_kalmanson.WitnessString() + "); fig1 kalmanson yes";
  if (!fig3_demidenko) o.Fail("fig3 is not Demidenko");
  if (fig3_kalmanson.holds) o.Fail("fig3 is Kalmanson");
  if (!fig1_kalmanson) o.Fail("fig1 is not Kalmanson");
  if (seconds >= kClassSeconds) o.Fail("too slow");
  return o;
}

Outcome OracleSweep() {
  Outcome o;
  const auto start = Clock::now();
  SolveOptions options;
  options.check_class = false;
  long pairs = 0;
  int instances = 0;
  for (const SweepInstance& inst : Sweep(4, 9, kSweepPerSize)) {
    ++instances;
    if (!IsDemidenko(inst.matrix).holds) o.Fail("not Demidenko: " + inst.label);
    const int n = inst.matrix.size();
    for (City s = 1; s <= n; ++s) {
      for (City t = 1; t <= n; ++t) {
        if (s == t) continue;
        ++pairs;
        const double solver = Solve(inst.matrix, s, t, options).length;
        const double oracle = HeldKarpPath(inst.matrix, s, t).length;
        if (!Near(solver, oracle, inst.exact)) {
          std::ostringstream s_out;
          s_out.precision(17);
          s_out << inst.label << " (" << s << "," << t << ") solver " << solver
                << " oracle " << oracle;
          o.Fail(s_out.str());
        }
      }
    }
  }
  const double seconds = Since(start);
  if (o.pass) {
    std::ostringstream s;
    s << instances << " instances, " << pairs << " endpoint pairs, 0 mismatches in "
      << seconds << " s";
    o.detail = s.str();
  }
  if (seconds >= kSweepSeconds) o.Fail("too slow");
  return o;
}

Outcome PyramidalTour() {
  Outcome o;
  int checked = 0;
  for (const SweepInstance& inst : Sweep(3, 12, kSweepPerSize)) {
    const SolveResult tour = PyramidalTspTour(inst.matrix);
    const double oracle = HeldKarpTour(inst.matrix).length;
    const PyramidalTables tables(inst.matrix);
    const double closed = tables.E(inst.matrix.size(), 1, 2) + tables.c(2, 1);
    if (!Near(tour.length, oracle, inst.exact)) {
      o.Fail(inst.label + " tour differs from the oracle");
    }
    if (tour.length != closed) o.Fail(inst.label + " tour differs from E(1,2)+c21");
    ++checked;
  }
  if (o.pass) o.detail = std::to_string(checked) + " instances, n 3..12";
  return o;
}

Outcome Structure() {
  Outcome o;
  int paths = 0;
  int general = 0;
  int general_monotone = 0;
  for (const SweepInstance& inst : Sweep(3, 10, kSweepPerSize)) {
    const int n = inst.matrix.size();
    for (City s = 1; s <= n; ++s) {
      for (City t = 1; t <= n; ++t) {
        if (s == t) continue;
        const SolveResult r = Solve(inst.matrix, s, t);
        ++paths;
        const std::string where = inst.label + " (" + std::to_string(s) + "," +
                                  std::to_string(t) + ") " + r.path.ToString();
        if (!IsSpanningPath(r.path, n, s, t)) o.Fail("invalid " + where);
        if (FindForbiddenPair(r.path)) o.Fail("forbidden pair " + where);
        const bool monotone = HasMonotoneExtrema(AnalyzeShape(r.path));
        // Monotone extrema are guaranteed for paths leaving city 1.
        if (s == 1) {
          if (!monotone) o.Fail("extrema not monotone " + where);
        } else {
          ++general;
          if (monotone) ++general_monotone;
        }
      }
    }
    CityPath identity;
    identity.cities.resize(n);
    std::iota(identity.cities.begin(), identity.cities.end(), 1);
    const double ident = PathLength(inst.matrix, identity);
    if (!Near(Solve(inst.matrix, 1, n).length, ident, inst.exact)) {
      o.Fail(inst.label + " (1,n) optimum differs from the identity path");
    }
  }
  if (o.pass) {
    o.detail = std::to_string(paths) + " paths; general endpoints with monotone "
               "extrema: " + std::to_string(general_monotone) + "/" +
               std::to_string(general);
  }
  return o;
}

Outcome Uncrossing() {
  Outcome o;
  SplitMix64 rng(kSeed);
  const std::vector<SweepInstance> pool = Sweep(4, 10, kSweepPerSize);
  long total_steps = 0;
  for (int k = 0; k < kUncrossPaths; ++k) {
    const SweepInstance& inst = pool[k % pool.size()];
    const int n = inst.matrix.size();
    CityPath p;
    p.cities.resize(n);
    std::iota(p.cities.begin(), p.cities.end(), 1);
    for (int i = n - 1; i > 0; --i) {
      std::swap(p.cities[i], p.cities[rng.Uniform(0, i)]);
    }
    const std::int64_t initial = Potential(p);
    std::int64_t last = initial;
    int steps = 0;
    const CityPath u = UncrossAll(p, [&](const CityPath& step) {
      const std::int64_t now = Potential(step);
      if (now >= last) o.Fail(inst.label + " potential did not decrease");
      last = now;
      ++steps;
    });
    total_steps += steps;
    if (steps > initial) o.Fail(inst.label + " too many steps");
    if (FindForbiddenPair(u)) o.Fail(inst.label + " output keeps a forbidden pair");
    if (PathLength(inst.matrix, u) >
        PathLength(inst.matrix, p) + kLawTolerance) {
      o.Fail(inst.label + " uncrossing lengthened " + p.ToString());
    }
  }
  if (o.pass) {
    o.detail = std::to_string(kUncrossPaths) + " paths, " +
               std::to_string(total_steps) + " moves";
  }
  return o;
}

Outcome CrossRelations() {
  Outcome o;
  long cells = 0;
  for (const SweepInstance& inst : Sweep(3, 12, kSweepPerSize)) {
    const PyramidalTables t(inst.matrix);
    const int n = t.size();
    for (int m = 2; m <= n; ++m) {
      for (City i = 1; i < m; ++i) {
        for (City j = i + 1; j < m; ++j) {
          double best = INFINITY;
          for (City k = j + 1; k <= m; ++k) {
            best = std::min(best, t.c(i, k) + t.Lambda(m, k, j));
          }
          ++cells;
          if (!Near(t.E(m, i, j), best, inst.exact)) o.Fail(inst.label + " E cell");
        }
      }
    }
    for (int w = 1; w <= n; ++w) {
      for (City j = w + 1; j <= n; ++j) {
        for (City i = j + 1; i <= n; ++i) {
          double best = INFINITY;
          for (City k = w; k < j; ++k) {
            best = std::min(best, t.c(i, k) + t.V(w, j, k));
          }
          ++cells;
          if (!Near(t.D(w, i, j), best, inst.exact)) o.Fail(inst.label + " D cell");
        }
      }
    }
  }
  if (o.pass) o.detail = std::to_string(cells) + " cells, n 3..12";
  return o;
}

Outcome InvarianceLaws() {
  Outcome o;
  constexpr double kShift = 7.0;
  long checks = 0;
  for (const SweepInstance& inst : Sweep(3, 9, kSweepPerSize)) {
    const int n = inst.matrix.size();
    const DistanceMatrix shifted = Shift(inst.matrix, kShift);
    const DistanceMatrix reversed = Reverse(inst.matrix);
    for (City s = 1; s <= n; ++s) {
      for (City t = 1; t <= n; ++t) {
        if (s == t) continue;
        const double len = Solve(inst.matrix, s, t).length;
        const std::string where = inst.label + " (" + std::to_string(s) + "," +
                                  std::to_string(t) + ")";
        if (std::abs(Solve(shifted, s, t).length - (len + (n - 1) * kShift)) >
            kLawTolerance) {
          o.Fail("shift " + where);
        }
        if (std::abs(Solve(reversed, n + 1 - s, n + 1 - t).length - len) >
            kLawTolerance) {
          o.Fail("reversal " + where);
        }
        if (std::abs(Solve(inst.matrix, t, s).length - len) > kLawTolerance) {
          o.Fail("symmetry " + where);
        }
        ++checks;
      }
    }
  }
  if (o.pass) o.detail = std::to_string(checks) + " endpoint pairs";
  return o;
}

Outcome Performance() {
  Outcome o;
  {
    const DistanceMatrix m = GenBanded(100, kSeed);
    const auto start = Clock::now();
    const SolveResult r = Solve(m, 30, 70);
    const double seconds = Since(start);
    if (!IsSpanningPath(r.path, 100, 30, 70)) o.Fail("n=100 path invalid");
    if (seconds >= kLargeSolveSeconds) o.Fail("n=100 took too long");
    std::ostringstream s;
    s << "n=100 in " << seconds << " s";
    o.detail = s.str();
  }
  std::vector<double> xs, ys;
  for (int n : {20, 40, 60, 80}) {
    const DistanceMatrix m = GenBanded(n, kSeed + n);
    const City s = static_cast<City>(std::lround(0.3 * n));
    const City t = static_cast<City>(std::lround(0.7 * n));
    const auto start = Clock::now();
    Solve(m, s, t);
    xs.push_back(std::log(n));
    ys.push_back(std::log(std::max(Since(start), 1e-9)));
  }
  const double mx = std::accumulate(xs.begin(), xs.end(), 0.0) / xs.size();
  const double my = std::accumulate(ys.begin(), ys.end(), 0.0) / ys.size();
  double sxy = 0.0, sxx = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxy += (xs[i] - mx) * (ys[i] - my);
    sxx += (xs[i] - mx) * (xs[i] - mx);
  }
  const double exponent = sxy / sxx;
  std::ostringstream s;
  s.precision(3);
  s << o.detail << "; fitted exponent " << exponent << " over n 20..80";
  o.detail = s.str();
  if (exponent > kMaxFittedExponent) o.Fail(o.detail);
  return o;
}

}  // namespace
}  // namespace demipath

int main() {
  using demipath::Outcome;
  struct Criterion {
    const char* name;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {"fig3 (5,7) optimal path", demipath::Fig3Path},
      {"fig1 (1,11) matches oracle", demipath::Fig1Oracle},
      {"class checks on fixtures", demipath::ClassChecks},
      {"oracle equivalence sweep", demipath::OracleSweep},
      {"pyramidal tour", demipath::PyramidalTour},
      {"path structure", demipath::Structure},
      {"uncrossing", demipath::Uncrossing},
      {"table cross-relations", demipath::CrossRelations},
      {"invariance laws", demipath::InvarianceLaws},
      {"performance smoke", demipath::Performance},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].run();
    } catch (const std::exception& e) {
      o.Fail(std::string("exception: ") + e.what());
    }
    if (!o.pass) ++failures;
    std::printf("%s %2zu %s: %s\n", o.pass ? "PASS" : "FAIL", i + 1,
                criteria[i].name, o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n",
              static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}

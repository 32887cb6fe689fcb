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

#include "demipath/path_solver.h"

#include <gtest/gtest.h>

#include <algorithm>
#include <vector>

#include "demipath/endpoint_one_solver.h"
#include "demipath/oracle.h"
#include "test_util.h"

namespace demipath {
namespace {

using testing::AbsDiff;

std::vector<City> Sorted(std::vector<City> c) {
  std::sort(c.begin(), c.end());
  return c;
}

TEST(SolveTest, AbsDiffTwoToThree) {
  const SolveResult r = Solve(AbsDiff(4), 2, 3);
  EXPECT_EQ(r.length, 5.0);
  EXPECT_EQ(r.path.cities, (std::vector<City>{2, 1, 4, 3}));
}

TEST(SolveTest, Fig3FiveToSeven) {
  const DistanceMatrix m = testing::FixtureMatrix("fig3");
  const CityPath reference{{5, 6, 4, 2, 1, 3, 8, 9, 11, 12, 10, 7}};
  const SolveResult r = Solve(m, 5, 7);
  EXPECT_NEAR(r.length, PathLength(m, reference), 1e-9);
  EXPECT_EQ(r.path, reference);
}

TEST(SolveTest, BadEndpoints) {
  for (auto [s, t] : {std::pair{2, 2}, {0, 3}, {1, 5}}) {
    try {
      Solve(AbsDiff(4), s, t);
      FAIL() << "expected kBadEndpoint";
    } catch (const DemipathError& e) {
      EXPECT_EQ(e.code(), ErrorCode::kBadEndpoint);
    }
  }
}

TEST(SolveTest, RejectsAsymmetricInput) {
  EXPECT_THROW(Solve(DistanceMatrix::FromRows({{0, 1, 2}, {1, 0, 3}, {2, 4, 0}}),
                     1, 3),
               AsymmetricMatrixError);
}

TEST(PostfixTest, AbsDiffExample) {
  const PostfixResult r = PostfixLength(AbsDiff(4), 3, 1, 3);
  EXPECT_EQ(r.length, 4.0);
  EXPECT_EQ(r.path.cities, (std::vector<City>{1, 4, 3}));
}

TEST(PostfixTest, PEqualsTEndsAtT) {
  const DistanceMatrix m = GenBanded(8, 4);
  for (City x = 1; x < 5; ++x) {
    const PostfixResult r = PostfixLength(m, 5, x, 5);
    EXPECT_EQ(r.path.front(), x);
    EXPECT_EQ(r.path.back(), 5);
  }
}

TEST(PostfixTest, SharedRowMatchesSeparateSolves) {
  for (const auto& inst : testing::DemidenkoSweep(5, 9, 2)) {
    const int n = inst.matrix.size();
    for (City s = 2; s < n - 1; ++s)
      for (City t = s + 1; t < n; ++t)
        for (int p = s + 1; p <= t; ++p) {
          const PostfixRow row = PostfixLengths(inst.matrix, p, s, t);
          for (City x = 1; x < p; ++x) {
            if (x == s) continue;
            const PostfixResult alone = PostfixLength(inst.matrix, p, x, t);
            EXPECT_TRUE(testing::Near(row.length[x], alone.length, inst.exact))
                << inst.label;
            std::vector<City> expected = {x};
            for (City c = p; c <= n; ++c) expected.push_back(c);
            EXPECT_EQ(Sorted(row.path[x].cities), Sorted(expected));
            EXPECT_EQ(row.path[x].front(), x);
            EXPECT_EQ(row.path[x].back(), t);
            EXPECT_NEAR(PathLength(inst.matrix, row.path[x]), row.length[x],
                        1e-9);
          }
        }
  }
}

TEST(AugmentedPrefixTest, AbsDiffExample) {
  const std::vector<double> t_row = {0.0, 4.0, 0.0};  // T(1, 3) = 4
  const AugmentedPrefixResult r = AugmentedPrefix(AbsDiff(4), 3, 2, t_row);
  EXPECT_EQ(r.length, 5.0);
  EXPECT_EQ(r.x_best, 1);
  EXPECT_EQ(r.prefix_path.cities, (std::vector<City>{2, 1}));
  EXPECT_LT(r.length, r.sentinel);
}

TEST(AugmentedPrefixTest, SharedRunMatchesPerJunctionRuns) {
  for (const auto& inst : testing::DemidenkoSweep(5, 9, 2)) {
    const int n = inst.matrix.size();
    for (City s = 2; s < n - 1; ++s)
      for (City t = s + 1; t < n; ++t)
        for (int p = s + 1; p <= t; ++p) {
          const PostfixRow row = PostfixLengths(inst.matrix, p, s, t);
          const AugmentedPrefixResult shared =
              AugmentedPrefix(inst.matrix, p, s, row.length);
          double best_single = shared.sentinel;
          for (City x = 1; x < p; ++x) {
            if (x == s) continue;
            std::vector<double> single(p, shared.sentinel);
            single[x] = row.length[x];
            try {
              const AugmentedPrefixResult one =
                  AugmentedPrefix(inst.matrix, p, s, single);
              EXPECT_LE(shared.length, one.length + 1e-9) << inst.label;
              best_single = std::min(best_single, one.length);
            } catch (const DemipathError& e) {
              EXPECT_EQ(e.code(), ErrorCode::kNoFeasibleJunction);
            }
          }
          EXPECT_TRUE(testing::Near(shared.length, best_single, inst.exact))
              << inst.label << " s=" << s << " t=" << t << " p=" << p;
          // The prefix covers exactly 1..p-1 from s to the junction.
          std::vector<City> expected;
          for (City c = 1; c < p; ++c) expected.push_back(c);
          EXPECT_EQ(Sorted(shared.prefix_path.cities), expected);
          EXPECT_EQ(shared.prefix_path.front(), s);
          EXPECT_EQ(shared.prefix_path.back(), shared.x_best);
          EXPECT_NEAR(PathLength(inst.matrix, shared.prefix_path) +
                          row.length[shared.x_best],
                      shared.length, 1e-9);
        }
  }
}

TEST(AssemblePathTest, Example) {
  SplitDecomposition d;
  d.p = 3;
  d.x = 1;
  d.prefix_path = CityPath{{2, 1}};
  d.postfix_path = CityPath{{1, 4, 3}};
  EXPECT_EQ(AssemblePath(d).cities, (std::vector<City>{2, 1, 4, 3}));
}

TEST(AssemblePathTest, JunctionMismatch) {
  SplitDecomposition d;
  d.x = 1;
  d.prefix_path = CityPath{{2, 1}};
  d.postfix_path = CityPath{{3, 4}};
  try {
    AssemblePath(d);
    FAIL() << "expected kJunctionMismatch";
  } catch (const DemipathError& e) {
    EXPECT_EQ(e.code(), ErrorCode::kJunctionMismatch);
  }
}

TEST(SolveBySplitTest, DecompositionIsConsistent) {
  for (const auto& inst : testing::DemidenkoSweep(5, 9, 2)) {
    const int n = inst.matrix.size();
    for (City s = 2; s < n - 1; ++s)
      for (City t = s + 1; t < n; ++t) {
        SplitDecomposition d;
        const SolveResult r = SolveBySplit(inst.matrix, s, t, {}, &d);
        EXPECT_GE(d.p, s + 1);
        EXPECT_LE(d.p, t);
        EXPECT_LT(d.x, d.p);
        EXPECT_NE(d.x, s);
        EXPECT_NEAR(d.combined_length,
                    PathLength(inst.matrix, d.prefix_path) + d.postfix_length,
                    1e-9);
        EXPECT_EQ(r.path, AssemblePath(d));
        EXPECT_NEAR(PathLength(inst.matrix, r.path), d.combined_length, 1e-9);
      }
  }
}

TEST(SolveTest, MatchesOracleForAllEndpointPairs) {
  SolveOptions options;
  options.cross_check_junctions = true;
  for (const auto& inst : testing::DemidenkoSweep(2, 9, 2)) {
    const int n = inst.matrix.size();
    for (City s = 1; s <= n; ++s)
      for (City t = 1; t <= n; ++t) {
        if (s == t) continue;
        const SolveResult r = Solve(inst.matrix, s, t, options);
        const double oracle = HeldKarpPath(inst.matrix, s, t).length;
        EXPECT_TRUE(testing::Near(r.length, oracle, inst.exact))
            << inst.label << " (" << s << "," << t << ") solver " << r.length
            << " oracle " << oracle;
        EXPECT_TRUE(IsSpanningPath(r.path, n, s, t)) << r.path.ToString();
        EXPECT_NEAR(PathLength(inst.matrix, r.path), r.length, 1e-9);
      }
  }
}

TEST(SolveTest, DispatchAndSymmetryLaws) {
  for (const auto& inst : testing::DemidenkoSweep(3, 9, 1)) {
    const int n = inst.matrix.size();
    const DistanceMatrix reversed = Reverse(inst.matrix);
    for (City s = 1; s <= n; ++s)
      for (City t = 1; t <= n; ++t) {
        if (s == t) continue;
        const double len = Solve(inst.matrix, s, t).length;
        EXPECT_NEAR(len, Solve(inst.matrix, t, s).length, 1e-9);
        EXPECT_NEAR(len, Solve(reversed, n + 1 - s, n + 1 - t).length, 1e-9);
        if (s == 1) EXPECT_EQ(len, SolveFromFirst(inst.matrix, t).length);
      }
  }
}

TEST(SolveTest, OptimalPathsHaveNoForbiddenPairs) {
  for (const auto& inst : testing::DemidenkoSweep(4, 9, 2)) {
    const int n = inst.matrix.size();
    for (City s = 1; s <= n; ++s)
      for (City t = 1; t <= n; ++t) {
        if (s == t) continue;
        const SolveResult r = Solve(inst.matrix, s, t);
        EXPECT_FALSE(FindForbiddenPair(r.path).has_value())
            << inst.label << " " << r.path.ToString();
      }
  }
}

// Structure of optimal paths once forbidden pairs are removed: for s < t,
// city 1 comes before city n, every city on the way from s to 1 is below
// every city on the way from n to t, and the 1..n stretch is increasing.
TEST(SolveTest, UncrossedOraclePathsHaveSplitStructure) {
  for (const auto& inst : testing::DemidenkoSweep(4, 8, 2)) {
    const int n = inst.matrix.size();
    for (City s = 2; s < n; ++s)
      for (City t = s + 1; t < n; ++t) {
        const SolveResult oracle = HeldKarpPath(inst.matrix, s, t);
        const CityPath u = UncrossAll(oracle.path);
        EXPECT_TRUE(testing::Near(PathLength(inst.matrix, u), oracle.length,
                                  inst.exact))
            << inst.label;
        const auto& c = u.cities;
        const auto at1 = std::find(c.begin(), c.end(), 1) - c.begin();
        const auto atn = std::find(c.begin(), c.end(), n) - c.begin();
        ASSERT_LT(at1, atn) << u.ToString();
        const City high_of_head = *std::max_element(c.begin(), c.begin() + at1 + 1);
        const City low_of_tail = *std::min_element(c.begin() + atn, c.end());
        EXPECT_LT(high_of_head, low_of_tail) << u.ToString();
        EXPECT_TRUE(std::is_sorted(c.begin() + at1, c.begin() + atn + 1))
            << u.ToString();
      }
  }
}

}  // namespace
}  // namespace demipath

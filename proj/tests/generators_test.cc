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

#include "demipath/generators.h"

#include <gtest/gtest.h>

#include "demipath/matrix_checks.h"
#include "demipath/rng.h"
#include "test_util.h"

namespace demipath {
namespace {

TEST(SplitMix64Test, ReferenceStream) {
  // First outputs for seed 1234567, as published with the algorithm.
  SplitMix64 rng(1234567);
  EXPECT_EQ(rng.Next(), 6457827717110365317ULL);
  EXPECT_EQ(rng.Next(), 3203168211198807973ULL);
  EXPECT_EQ(rng.Next(), 9817491932198370423ULL);
}

TEST(SplitMix64Test, UniformStaysInRange) {
  SplitMix64 rng(7);
  for (int k = 0; k < 10000; ++k) {
    const auto v = rng.Uniform(-3, 5);
    EXPECT_GE(v, -3);
    EXPECT_LE(v, 5);
  }
}

TEST(GenBandedTest, Profiles) {
  EXPECT_EQ(GenBanded(5, 1, {BandProfile::kIdentity}), testing::AbsDiff(5));
  const DistanceMatrix c = GenBanded(6, 1, {BandProfile::kConstant});
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) EXPECT_EQ(c(i, j), i == j ? 0.0 : 1.0);
  EXPECT_TRUE(IsDemidenko(c).holds);
  EXPECT_TRUE(IsKalmanson(c).holds);
}

TEST(GenBandedTest, SweepIsDemidenkoAndBanded) {
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    const int n = 4 + static_cast<int>(seed % 9);
    const DistanceMatrix m = GenBanded(n, seed);
    ASSERT_TRUE(IsDemidenko(m).holds) << seed;
    for (int i = 0; i + 1 < n; ++i) {
      EXPECT_EQ(m(i, i + 1), m(0, 1));
      EXPECT_GE(m(0, 1), 1.0);
    }
  }
}

TEST(GenConvexPolygonTest, RegularPolygonIsKalmanson) {
  for (int n = 3; n <= 16; ++n) EXPECT_TRUE(IsKalmanson(RegularPolygon(n)).holds);
}

TEST(GenConvexPolygonTest, SweepIsKalmanson) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const int n = 3 + static_cast<int>(seed % 14);
    EXPECT_TRUE(IsKalmanson(GenConvexPolygon(n, seed)).holds) << seed;
  }
}

TEST(FixtureTest, Fig1IsConvexPosition) {
  const auto pts = FixturePoints("fig1");
  ASSERT_TRUE(pts.has_value());
  EXPECT_EQ(pts->size(), 19u);
  EXPECT_TRUE(IsKalmanson(EuclideanFromPoints(*pts)).holds);
}

TEST(FixtureTest, Fig3IsDemidenkoOnly) {
  const auto pts = FixturePoints("fig3");
  ASSERT_TRUE(pts.has_value());
  EXPECT_EQ(pts->size(), 12u);
  const DistanceMatrix m = EuclideanFromPoints(*pts);
  EXPECT_TRUE(IsDemidenko(m).holds);
  EXPECT_FALSE(IsKalmanson(m).holds);
}

TEST(FixtureTest, UnknownName) {
  EXPECT_FALSE(FixturePoints("fig2").has_value());
}

TEST(TreeTest, StarHasAllDistancesTwo) {
  const DistanceMatrix m = TreeLeafDistances(StarTree(6));
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) EXPECT_EQ(m(i, j), i == j ? 0.0 : 2.0);
}

TEST(TreeTest, CaterpillarIsKalmanson) {
  // Spine 0 - 1 - 2 - 3 with one leaf hanging off each spine node.
  OrderedTree t;
  t.parent = {-1, 0, 0, 2, 2, 4, 4, 6, 6};
  t.edge = {0, 1, 2, 3, 2, 1, 2, 2, 1};
  const DistanceMatrix m = TreeLeafDistances(t);
  EXPECT_EQ(m.size(), 5);
  EXPECT_TRUE(IsKalmanson(m).holds);
}

TEST(TreeTest, SweepIsKalmanson) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const int n = 2 + static_cast<int>(seed % 15);
    const DistanceMatrix m = GenTreeKalmanson(n, seed);
    EXPECT_EQ(m.size(), n);
    EXPECT_TRUE(IsKalmanson(m).holds) << seed;
  }
}

TEST(PerturbedTest, ZeroMagnitudeIsBanded) {
  EXPECT_EQ(GenPerturbedDemidenko(8, 3, 0).matrix, GenBanded(8, 3));
}

TEST(PerturbedTest, AcceptedOutputsAreDemidenko) {
  int non_kalmanson = 0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const int n = 4 + static_cast<int>(seed % 9);
    const PerturbedInstance p = GenPerturbedDemidenko(n, seed);
    EXPECT_TRUE(IsDemidenko(p.matrix).holds) << seed;
    EXPECT_EQ(p.kalmanson, IsKalmanson(p.matrix).holds);
    EXPECT_EQ(p.accepted, n);
    if (!p.kalmanson) ++non_kalmanson;
  }
  EXPECT_GT(non_kalmanson, 50);
}

TEST(PerturbedTest, BudgetExhaustion) {
  try {
    GenPerturbedDemidenko(8, 1, 3, 2);
    FAIL() << "expected kRetryBudgetExhausted";
  } catch (const DemipathError& e) {
    EXPECT_EQ(e.code(), ErrorCode::kRetryBudgetExhausted);
  }
}

TEST(GeneratorTest, SameSeedSameInstance) {
  for (Family f : {Family::kBanded, Family::kConvexPolygon,
                   Family::kTreeKalmanson, Family::kPerturbed}) {
    EXPECT_EQ(Generate(f, 9, 77), Generate(f, 9, 77)) << FamilyName(f);
    EXPECT_EQ(ParseFamily(FamilyName(f)), f);
  }
  EXPECT_FALSE(ParseFamily("nope").has_value());
}

TEST(GeneratorTest, SizeGuards) {
  EXPECT_THROW(GenBanded(1, 0), DemipathError);
  EXPECT_THROW(GenConvexPolygon(2, 0), DemipathError);
  EXPECT_THROW(GenPerturbedDemidenko(3, 0), DemipathError);
}

}  // namespace
}  // namespace demipath

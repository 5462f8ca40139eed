// Copyright 2026 The Authors.
//
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

#include "divcom/datagen.h"

#include <gtest/gtest.h>

#include <cmath>
#include <stdexcept>
#include <vector>

namespace divcom {
namespace {

ResampleParams Params(double q, double phi, int n, int m, std::uint64_t seed) {
  return {.q = q, .phi = phi, .num_voters = n, .num_candidates = m,
          .seed = seed};
}

TEST(ResampleTest, DegenerateSpreads) {
  const ApprovalProfile identical = ResampleElection(Params(0.3, 0.0, 50, 10, 1));
  for (Voter i = 0; i < 50; ++i) {
    EXPECT_EQ(std::vector<Candidate>(identical.ballot(i).begin(),
                                     identical.ballot(i).end()),
              (std::vector<Candidate>{0, 1, 2}));
  }
  const ApprovalProfile empty = ResampleElection(Params(0.0, 0.7, 30, 12, 2));
  EXPECT_EQ(empty.total_approvals(), 0);
  EXPECT_EQ(ResampleElection(Params(1.0, 0.4, 5, 7, 3)).total_approvals(), 35);
}

TEST(ResampleTest, FullSpreadIsIndependentBernoulli) {
  // φ = 1: every cell approves with probability q regardless of position.
  const int n = 4000;
  const int m = 10;
  const double q = 0.3;
  const ApprovalProfile profile = ResampleElection(Params(q, 1.0, n, m, 4));
  const double sigma = std::sqrt(q * (1 - q) / n);
  const std::vector<int> counts = ApprovalCounts(profile);
  for (Candidate c = 0; c < m; ++c) {
    EXPECT_NEAR(counts[c] / static_cast<double>(n), q, 5 * sigma) << c;
  }
}

TEST(ResampleTest, ReproducibleAndValidated) {
  EXPECT_EQ(ResampleElection(Params(0.2, 0.5, 40, 30, 9)),
            ResampleElection(Params(0.2, 0.5, 40, 30, 9)));
  EXPECT_NE(ResampleElection(Params(0.2, 0.5, 40, 30, 9)),
            ResampleElection(Params(0.2, 0.5, 40, 30, 10)));
  EXPECT_THROW(ResampleElection(Params(1.1, 0.5, 4, 4, 0)),
               std::invalid_argument);
  EXPECT_THROW(ResampleElection(Params(0.5, -0.1, 4, 4, 0)),
               std::invalid_argument);
  EXPECT_THROW(ResampleElection(Params(0.5, 0.5, 0, 4, 0)),
               std::invalid_argument);
}

TEST(ApprovalwiseTest, Examples) {
  EXPECT_EQ(ApprovalwiseVectorOf(ApprovalProfile(3, {{0, 1, 2}, {0, 1, 2}})),
            (ApprovalwiseVector{1, 1, 1}));
  EXPECT_EQ(ApprovalwiseVectorOf(ApprovalProfile(2, {{}, {}})),
            (ApprovalwiseVector{0, 0}));
  // Counts (1, 2, 2) over n = 4: sorted column fractions.
  EXPECT_EQ(ApprovalwiseVectorOf(ApprovalProfile(3, {{0, 1}, {1, 2}, {2}, {}})),
            (ApprovalwiseVector{0.5, 0.5, 0.25}));
}

TEST(ApprovalwiseTest, LimitVectorExamples) {
  EXPECT_EQ(LimitVector(0.5, 0.0, 4), (ApprovalwiseVector{1, 1, 0, 0}));
  EXPECT_EQ(LimitVector(0.3, 1.0, 3), (ApprovalwiseVector{0.3, 0.3, 0.3}));
  EXPECT_EQ(LimitVector(0.5, 0.5, 4), (ApprovalwiseVector{0.75, 0.75, 0.25, 0.25}));
}

TEST(ApprovalwiseTest, DistanceExamples) {
  const std::vector<double> a = {0.2, 0.1};
  EXPECT_EQ(ApprovalwiseDistance(a, a), 0.0);
  const std::vector<double> ones = {1, 1, 1};
  const std::vector<double> zeros = {0, 0, 0};
  EXPECT_EQ(ApprovalwiseDistance(ones, zeros), 1.0);
  const std::vector<double> x = {1, 0};
  const std::vector<double> y = {0.5, 0.5};
  EXPECT_EQ(ApprovalwiseDistance(x, y), 0.5);
  EXPECT_THROW(ApprovalwiseDistance(x, ones), std::invalid_argument);
}

TEST(FitTest, QExamples) {
  EXPECT_EQ(FitQ(ApprovalProfile(3, {{}, {}})), 0.0);
  EXPECT_EQ(FitQ(ApprovalProfile(2, {{0, 1}, {0, 1}})), 1.0);
  EXPECT_EQ(FitQ(ApprovalProfile(4, {{0}, {1, 2, 3}})), 0.5);
}

TEST(FitTest, PhiGrid) {
  const std::vector<double> grid = PhiGrid();
  ASSERT_EQ(grid.size(), 101u);
  EXPECT_EQ(grid.front(), 0.0);
  EXPECT_EQ(grid.back(), 1.0);
  EXPECT_DOUBLE_EQ(grid[69], 0.69);
}

TEST(FitTest, PhiOnExactLimits) {
  const std::vector<double> grid = PhiGrid();
  // φ = 0 profile with matching q is exactly its limit.
  const ApprovalProfile identical = ResampleElection(Params(0.25, 0.0, 20, 8, 1));
  EXPECT_EQ(FitPhi(identical, 0.25, grid), 0.0);
  // A profile whose approvalwise vector equals the φ = 0.5 limit.
  std::vector<std::vector<Candidate>> ballots(4);
  ballots[0] = {0, 1, 2};
  ballots[1] = {0, 1};
  ballots[2] = {0, 1, 3};
  ballots[3] = {};
  const ApprovalProfile half(4, ballots);
  ASSERT_EQ(ApprovalwiseVectorOf(half), LimitVector(0.5, 0.5, 4));
  EXPECT_NEAR(FitPhi(half, 0.5, grid), 0.5, 1e-12);
  const std::vector<double> coarse = {0.0, 0.4, 0.7, 1.0};
  EXPECT_EQ(FitPhi(half, 0.5, coarse), 0.4);
}

TEST(FitTest, MonteCarloSelfConsistency) {
  const std::vector<double> grid = PhiGrid();
  double q_sum = 0;
  double phi_sum = 0;
  constexpr int kSeeds = 20;
  for (int seed = 0; seed < kSeeds; ++seed) {
    const ApprovalProfile profile =
        ResampleElection(Params(0.0891, 0.693, 1000, 400, 100 + seed));
    const double q = FitQ(profile);
    EXPECT_NEAR(q, 0.0891, 0.01);
    const double phi = FitPhi(profile, q, grid);
    EXPECT_GE(phi, 0.6);
    EXPECT_LE(phi, 0.8);
    q_sum += q;
    phi_sum += phi;
  }
  EXPECT_NEAR(q_sum / kSeeds, 0.0891, 0.002);
  EXPECT_NEAR(phi_sum / kSeeds, 0.693, 0.03);
}

TEST(FitTest, ApprovalwiseVectorConvergesToLimit) {
  const ApprovalwiseVector limit = LimitVector(0.0891, 0.693, 400);
  for (int seed = 0; seed < 10; ++seed) {
    const ApprovalProfile profile =
        ResampleElection(Params(0.0891, 0.693, 10000, 400, 500 + seed));
    EXPECT_LE(ApprovalwiseDistance(ApprovalwiseVectorOf(profile), limit), 0.02);
  }
}

}  // namespace
}  // namespace divcom

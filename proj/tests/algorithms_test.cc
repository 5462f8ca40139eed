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

#include "divcom/algorithms.h"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <set>
#include <stdexcept>

#include "test_util.h"

namespace divcom {
namespace {

using ::divcom::testing::BallotMasks;
using ::divcom::testing::BruteForceOptCount;
using ::divcom::testing::CoveredByMask;
using ::divcom::testing::FourVoterFixture;
using ::divcom::testing::RandomProfile;
using ::divcom::testing::RandomQuotaSpec;

TEST(GreedyTest, Examples) {
  ApprovalProfile unanimous(3, {{1}, {1, 2}, {0, 1}});
  const RunResult one = Greedy(unanimous, 1);
  EXPECT_EQ(one.committee.SortedMembers(), (std::vector<Candidate>{1}));
  EXPECT_EQ(one.score, 1.0);

  const RunResult pair = Greedy(FourVoterFixture(), 2);
  EXPECT_DOUBLE_EQ(pair.score, 0.75);
  EXPECT_EQ(pair.covered, 3);
  // Lowest-index tie-break: 0 first (gain 2), then 1 and 2 tie at gain 1.
  EXPECT_EQ(pair.committee.SortedMembers(), (std::vector<Candidate>{0, 1}));

  EXPECT_THROW(Greedy(FourVoterFixture(), 4), std::invalid_argument);
  EXPECT_THROW(Greedy(FourVoterFixture(), 0), std::invalid_argument);
}

TEST(GreedyTest, OptimalOnDisjointSupports) {
  // Candidate c approved by exactly the voters of block c; blocks disjoint.
  std::vector<std::vector<Candidate>> ballots;
  const std::vector<int> block_sizes = {3, 5, 2, 5, 4, 1};
  for (std::size_t c = 0; c < block_sizes.size(); ++c) {
    for (int i = 0; i < block_sizes[c]; ++i) {
      ballots.push_back({static_cast<Candidate>(c)});
    }
  }
  const ApprovalProfile profile(6, ballots);
  for (int k = 1; k <= 6; ++k) {
    EXPECT_EQ(Greedy(profile, k).covered, BruteForceOptCount(profile, k));
  }
}

TEST(GreedyEpsTest, ZeroEpsilonIsGreedy) {
  Rng rng(6);
  for (int trial = 0; trial < 30; ++trial) {
    const ApprovalProfile profile = RandomProfile(15, 8, 0.3, rng);
    EXPECT_EQ(GreedyEps(profile, 3, 0.0, trial).committee,
              Greedy(profile, 3).committee);
  }
}

TEST(GreedyEpsTest, LargeEpsilonMakesEveryCandidateEligible) {
  ApprovalProfile profile(4, {{0}, {0}, {0}, {1}});
  std::set<Candidate> first_picks;
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const RunResult result = GreedyEps(profile, 1, 1.0, seed);
    first_picks.insert(result.committee.members()[0]);
  }
  EXPECT_EQ(first_picks.size(), 4u);
  EXPECT_EQ(GreedyEps(profile, 2, 0.5, 9).committee,
            GreedyEps(profile, 2, 0.5, 9).committee);
  EXPECT_THROW(GreedyEps(profile, 1, -0.1, 0), std::invalid_argument);
}

TEST(ApprovalVotingTest, Examples) {
  ApprovalProfile unanimous(3, {{2}, {2}});
  EXPECT_EQ(ApprovalVoting(unanimous, 1).committee.SortedMembers(),
            (std::vector<Candidate>{2}));
  EXPECT_EQ(ApprovalVoting(FourVoterFixture(), 2).committee.SortedMembers(),
            (std::vector<Candidate>{0, 1}));
  ApprovalProfile flat(5, {{0, 1, 2, 3, 4}});
  EXPECT_EQ(ApprovalVoting(flat, 3).committee.SortedMembers(),
            (std::vector<Candidate>{0, 1, 2}));
}

TEST(LsPavTest, HugeThresholdKeepsInitialCommittee) {
  Rng rng(10);
  const ApprovalProfile profile = RandomProfile(20, 8, 0.3, rng);
  const RunResult result = LsPav(profile, 3, 1e9, 5);
  EXPECT_EQ(result.iterations, 0);
  // Same seed, any threshold: the start is shared, so a run that cannot
  // swap returns it.
  EXPECT_EQ(LsPav(profile, 3, 1e12, 5).committee, result.committee);
}

TEST(LsPavTest, FindsUnanimousCandidate) {
  ApprovalProfile profile(6, {{4}, {4}, {4, 1}});
  const RunResult result = LsPav(profile, 1, 1.0, 3);
  EXPECT_EQ(result.committee.SortedMembers(), (std::vector<Candidate>{4}));
  EXPECT_LE(result.iterations, 6);
}

TEST(LsPavTest, TerminalCommitteeHasNoImprovingNeighbour) {
  Rng rng(12);
  for (int trial = 0; trial < 20; ++trial) {
    const ApprovalProfile profile =
        trial == 0 ? FourVoterFixture() : RandomProfile(25, 9, 0.3, rng);
    const int k = trial == 0 ? 2 : 3;
    const RunResult result = LsPav(profile, k, 1.0, trial);
    const double threshold =
        static_cast<double>(profile.num_voters()) / (k * k);
    const double score = PavScore(profile, result.committee);
    for (Candidate in = 0; in < profile.num_candidates(); ++in) {
      if (result.committee.Contains(in)) continue;
      for (Candidate out : result.committee.SortedMembers()) {
        Committee neighbour = result.committee;
        neighbour.Swap(in, out);
        EXPECT_LT(PavScore(profile, neighbour) - score, threshold + 1e-9);
      }
    }
  }
}

TEST(ExactOptTest, Examples) {
  const ApprovalProfile profile = FourVoterFixture();
  EXPECT_DOUBLE_EQ(ExactOpt(profile, 2).score, 0.75);
  EXPECT_EQ(ExactOpt(profile, 3).covered, 4);
  ApprovalProfile big(40, {{0}});
  EXPECT_THROW(ExactOpt(big, 20), std::invalid_argument);
}

TEST(ExactOptTest, MatchesBitmaskOracleAndBoundsGreedy) {
  Rng rng(13);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 1 + static_cast<int>(rng.Index(20));
    const int m = 2 + static_cast<int>(rng.Index(9));
    const int k = 1 + static_cast<int>(rng.Index(m));
    const ApprovalProfile profile = RandomProfile(n, m, 0.3, rng);
    const Optimum opt = ExactOpt(profile, k);
    EXPECT_EQ(opt.covered, BruteForceOptCount(profile, k));
    EXPECT_EQ(CoveredVoters(profile, opt.committee), opt.covered);
    EXPECT_GE(opt.covered, Greedy(profile, k).covered);
  }
}

TEST(ExactOptTest, MatroidVersionScansBasesOnly) {
  Rng rng(14);
  for (int trial = 0; trial < 30; ++trial) {
    const int m = 3 + static_cast<int>(rng.Index(6));
    const QuotaSpec spec = RandomQuotaSpec(m, rng);
    const QuotaMatroid matroid(spec);
    const ApprovalProfile profile = RandomProfile(15, m, 0.3, rng);
    const auto masks = BallotMasks(profile);
    int best = -1;
    for (std::uint64_t s = 0; s < (std::uint64_t{1} << m); ++s) {
      std::vector<Candidate> set;
      for (Candidate c = 0; c < m; ++c) {
        if (s >> c & 1) set.push_back(c);
      }
      if (matroid.SatisfiesQuotas(set)) {
        best = std::max(best, CoveredByMask(masks, s));
      }
    }
    const Optimum opt = ExactOpt(profile, matroid);
    EXPECT_EQ(opt.covered, best);
    EXPECT_TRUE(matroid.SatisfiesQuotas(opt.committee.SortedMembers()));
  }
}

TEST(SampleSizeTest, GreedyWorkedValues) {
  // Reference values computed with an independent calculator.
  const SampleSize size = RequiredSampleSizeGreedy(0.85, 0.05, 1000, 8);
  EXPECT_NEAR(size.epsilon, 0.279172, 5e-7);
  EXPECT_EQ(size.voters, 326);
  EXPECT_EQ(QueryBudgetGreedy(0.85, 0.05, 1000, 8, 20),
            std::int64_t{8} * 20 * 83 * 326);
  EXPECT_EQ(QueryBudgetGreedy(0.85, 0.05, 1000, 8, 1000),
            std::int64_t{8} * 1000 * 326);
  EXPECT_THROW(QueryBudgetGreedy(0.85, 0.05, 1000, 8, 8),
               std::invalid_argument);
}

TEST(SampleSizeTest, GreedyMonotonicity) {
  EXPECT_GT(RequiredSampleSizeGreedy(0.1, 0.05, 100, 5).epsilon, 1.0);
  std::int64_t previous = RequiredSampleSizeGreedy(0.8, 0.01, 500, 6).voters;
  for (double delta : {0.02, 0.05, 0.1, 0.3, 0.9}) {
    const std::int64_t voters =
        RequiredSampleSizeGreedy(0.8, delta, 500, 6).voters;
    EXPECT_LE(voters, previous);
    previous = voters;
  }
}

TEST(SampleSizeTest, LocalSearchWorkedValues) {
  const double beta = LocalSearchStep(0.85, 8, 1.0);
  EXPECT_NEAR(beta, 0.15 / (0.85 * 8 * std::log(8.0)), 1e-15);
  EXPECT_NEAR(beta, 0.0106081, 5e-8);
  const double alpha_8 = AlphaSequence(8)[8];
  const SampleSize size = RequiredSampleSizeLs(beta, 2.0, 0.05, 1000, 8,
                                               alpha_8);
  EXPECT_NEAR(size.epsilon, beta / 4.0, 1e-15);
  EXPECT_EQ(size.voters, 2076304);
  EXPECT_EQ(LocalSearchIterationCap(beta, 2.0, alpha_8), 272);
  EXPECT_EQ(QueryBudgetLs(beta, 2.0, 0.05, 1000, 8, 20, alpha_8),
            std::int64_t{272} * 20 * 83 * 2076304);
  EXPECT_THROW(RequiredSampleSizeLs(beta, 1.0, 0.05, 1000, 8, alpha_8),
               std::invalid_argument);
}

TEST(SampleSizeTest, LocalSearchMonotonicity) {
  const double alpha = AlphaSequence(5)[5];
  std::int64_t previous = std::numeric_limits<std::int64_t>::max();
  for (double xi : {1.2, 1.5, 2.0, 4.0, 10.0}) {  // ε grows with ξ
    const std::int64_t voters =
        RequiredSampleSizeLs(0.05, xi, 0.05, 200, 5, alpha).voters;
    EXPECT_LT(voters, previous);
    previous = voters;
  }
  EXPECT_LT(RequiredSampleSizeLs(0.05, 2.0, 0.1, 200, 5, alpha).voters,
            RequiredSampleSizeLs(0.05, 2.0, 0.05, 200, 5, alpha).voters);
}

TEST(SampleSizeTest, InaccurateRepeats) {
  // 2 ln(nm/δ) / ln(1/(4p(1-p))) = 31.0077... for these inputs.
  EXPECT_EQ(RequiredRepeatsInaccurate(0.1, 0.05, 1921, 197), 32);
  EXPECT_LT(RequiredRepeatsInaccurate(0.1, 0.05, 10, 10),
            RequiredRepeatsInaccurate(0.1, 0.05, 1000, 1000));
  EXPECT_LT(RequiredRepeatsInaccurate(0.05, 0.05, 100, 100),
            RequiredRepeatsInaccurate(0.3, 0.05, 100, 100));
  EXPECT_LE(RequiredRepeatsInaccurate(1e-6, 0.05, 100, 100), 2);
  EXPECT_THROW(RequiredRepeatsInaccurate(0.5, 0.05, 10, 10),
               std::invalid_argument);
  EXPECT_THROW(RequiredRepeatsInaccurate(0.0, 0.05, 10, 10),
               std::invalid_argument);
}

TEST(SampleSizeTest, BudgetRule) {
  // ⌈(400-8)/(20-8)⌉ = 33 sets per round, 8 rounds: 1000·5/(8·33) = 18.9.
  EXPECT_EQ(SampleSizeForBudget(5, 1000, 400, 8, 20, 8), 18);
  EXPECT_EQ(SampleSizeForBudget(1, 10, 400, 8, 20, 8), 1);
  EXPECT_THROW(SampleSizeForBudget(0, 10, 400, 8, 20, 8),
               std::invalid_argument);
}

std::int64_t PerRoundQueries(int m, int k, int t, std::int64_t ell) {
  std::int64_t total = 0;
  for (int r = 0; r < k; ++r) {
    total += t * ((m - r + (t - r) - 1) / (t - r)) * ell;
  }
  return total;
}

TEST(GreedyIncompleteTest, CensusEqualsGreedy) {
  Rng rng(15);
  for (int trial = 0; trial < 30; ++trial) {
    const int m = 6 + static_cast<int>(rng.Index(20));
    const int k = 1 + static_cast<int>(rng.Index(4));
    const int t = k + 1 + static_cast<int>(rng.Index(m - k));
    const ApprovalProfile profile = RandomProfile(30, m, 0.2, rng);
    QueryOracle oracle = QueryOracle::Exact(profile, trial);
    oracle.set_census(true);
    const RunResult result = GreedyIncomplete(
        oracle, {.k = k, .query_size = t, .sample_override = 30});
    EXPECT_EQ(result.committee, Greedy(profile, k).committee);
    EXPECT_EQ(result.queries, PerRoundQueries(m, k, t, 30));
  }
}

TEST(GreedyIncompleteTest, QueriesFollowRoundFamilies) {
  Rng rng(16);
  const ApprovalProfile profile = RandomProfile(50, 30, 0.2, rng);
  QueryOracle oracle = QueryOracle::Exact(profile, 1);
  const RunResult result =
      GreedyIncomplete(oracle, {.k = 4, .query_size = 10, .gamma = 0.8,
                                .delta = 0.2, .sample_override = {}});
  const std::int64_t ell = RequiredSampleSizeGreedy(0.8, 0.2, 30, 4).voters;
  EXPECT_EQ(result.sample_size, ell);
  EXPECT_EQ(result.queries, PerRoundQueries(30, 4, 10, ell));
  EXPECT_LE(result.queries, QueryBudgetGreedy(0.8, 0.2, 30, 4, 10));
  EXPECT_EQ(oracle.queries(), result.queries);
  EXPECT_THROW(GreedyIncomplete(oracle, {.k = 4, .query_size = 4,
                                         .sample_override = {}}),
               std::invalid_argument);
}

TEST(LocalSearchBetaTest, UniqueBasisReturnedImmediately) {
  ApprovalProfile profile(3, {{0}, {1}});
  const RunResult result =
      LocalSearchBeta(profile, UniformMatroid(3, 3), 0.01, AlphaSequence(3), 1);
  EXPECT_EQ(result.committee.size(), 3);
  EXPECT_EQ(result.iterations, 0);
}

TEST(LocalSearchBetaTest, TerminatesInBetaLocalOptimum) {
  Rng rng(17);
  for (int trial = 0; trial < 25; ++trial) {
    const int m = 5 + static_cast<int>(rng.Index(8));
    const int k = 2 + static_cast<int>(rng.Index(3));
    const ApprovalProfile profile = RandomProfile(30, m, 0.25, rng);
    const AlphaSequence alphas(k);
    const double beta = LocalSearchStep(0.5, k, 1.0) / 4;
    const UniformMatroid matroid(m, k);
    const RunResult result =
        LocalSearchBeta(profile, matroid, beta, alphas, trial);
    for (const Exchange& e : ValidExchanges(matroid, result.committee)) {
      EXPECT_LE(AuxSwapDelta(profile, result.committee, e.in, e.out, alphas),
                beta);
    }
    EXPECT_LE(result.iterations, std::ceil(alphas[k] / beta));
  }
}

TEST(LocalSearchBetaTest, QuotaOutputsRespectQuotas) {
  Rng rng(18);
  for (int trial = 0; trial < 30; ++trial) {
    const int m = 4 + static_cast<int>(rng.Index(5));
    const QuotaSpec spec = RandomQuotaSpec(m, rng);
    const QuotaMatroid matroid(spec);
    const ApprovalProfile profile = RandomProfile(20, m, 0.3, rng);
    const int k = matroid.rank();
    const RunResult result =
        LocalSearchBeta(profile, matroid, 0.001, AlphaSequence(k), trial);
    EXPECT_TRUE(matroid.SatisfiesQuotas(result.committee.SortedMembers()));
  }
}

TEST(LsIncompleteTest, CensusFollowsCompleteTrajectory) {
  Rng rng(19);
  for (int trial = 0; trial < 20; ++trial) {
    const int m = 8 + static_cast<int>(rng.Index(20));
    const int k = 3 + static_cast<int>(rng.Index(3));
    const int t = k + 1 + static_cast<int>(rng.Index(m - k));
    const ApprovalProfile profile = RandomProfile(40, m, 0.2, rng);
    const AlphaSequence alphas(k);
    const double beta = LocalSearchStep(0.85, k, 1.0);
    const UniformMatroid matroid(m, k);
    QueryOracle oracle = QueryOracle::Exact(profile, 99);
    oracle.set_census(true);
    const RunResult sampled = LsIncomplete(
        oracle, matroid,
        {.beta = beta, .query_size = t, .xi = 1.0, .seed = 7u + trial,
         .sample_override = 40},
        alphas);
    const RunResult complete =
        LocalSearchBeta(profile, matroid, beta, alphas, 7u + trial);
    EXPECT_EQ(sampled.committee, complete.committee);
    EXPECT_EQ(sampled.iterations, complete.iterations);
  }
}

TEST(LsIncompleteTest, Preconditions) {
  ApprovalProfile profile(10, {{0}, {1}});
  QueryOracle oracle = QueryOracle::Exact(profile, 1);
  EXPECT_THROW(LsIncomplete(oracle, UniformMatroid(10, 2),
                            {.beta = 0.1, .query_size = 5, .sample_override = {}},
                            AlphaSequence(2)),
               std::invalid_argument);
  EXPECT_THROW(LsIncomplete(oracle, UniformMatroid(10, 3),
                            {.beta = 0.1, .query_size = 3, .sample_override = {}},
                            AlphaSequence(3)),
               std::invalid_argument);
  // ξ = 1 needs an explicit sample size (no margin for the formula).
  EXPECT_THROW(LsIncomplete(oracle, UniformMatroid(10, 3),
                            {.beta = 0.1, .query_size = 5, .xi = 1.0,
                             .sample_override = {}},
                            AlphaSequence(3)),
               std::invalid_argument);
}

TEST(InaccurateTest, DecodingAndAccounting) {
  Rng rng(20);
  const ApprovalProfile profile = RandomProfile(20, 8, 0.4, rng);
  QueryOracle oracle = QueryOracle::Inaccurate(profile, 0.1, 3);
  const RunResult result = GreedyInaccurate(oracle, 3, 0.1);
  const std::int64_t repeats = RequiredRepeatsInaccurate(0.1, 0.1, 20, 8);
  EXPECT_EQ(result.queries, repeats * 20 * 8);
  EXPECT_EQ(result.sample_size, repeats);

  QueryOracle exact = QueryOracle::Exact(profile, 3);
  EXPECT_THROW(GreedyInaccurate(exact, 3, 0.1), std::invalid_argument);
  EXPECT_EQ(DecodeByMajority(exact, 1), profile);

  QueryOracle quiet = QueryOracle::Inaccurate(profile, 1e-12, 4);
  EXPECT_EQ(DecodeByMajority(quiet, 1), profile);
  // Two answers that disagree decode as disapprove.
  ApprovalProfile yes(1, {{0}});
  int decoded_yes = 0;
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    QueryOracle noisy = QueryOracle::Inaccurate(yes, 0.45, seed);
    decoded_yes += DecodeByMajority(noisy, 2).Approves(0, 0) ? 1 : 0;
  }
  // Approve needs both answers right: probability 0.55² ≈ 0.30.
  EXPECT_NEAR(decoded_yes / 200.0, 0.3025, 0.1);
}

}  // namespace
}  // namespace divcom

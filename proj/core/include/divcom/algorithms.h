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

#ifndef DIVCOM_ALGORITHMS_H_
#define DIVCOM_ALGORITHMS_H_

#include <cstdint>
#include <optional>

#include "divcom/election.h"
#include "divcom/matroid.h"
#include "divcom/objectives.h"
#include "divcom/query_oracle.h"

namespace divcom {

// Outcome of one committee-selection run. `score` and `covered` are always
// measured on the ground-truth profile, even for runs that only saw oracle
// answers.
struct RunResult {
  Committee committee;
  double score = 0.0;
  int covered = 0;
  std::int64_t queries = 0;
  int iterations = 0;
  std::uint64_t seed = 0;
  std::int64_t sample_size = 0;  // voters per query set (ℓ), or repeats (U)
};

// Ties between candidates go to the lowest index; ties between exchanges to
// the lexicographically smallest (in, out).

// Adds the candidate of largest marginal gain k times.
RunResult Greedy(const ApprovalProfile& profile, int k);

// Adds, each round, a uniformly random candidate whose marginal gain is
// within epsilon of the best. epsilon = 0 picks the lowest-index maximiser,
// reproducing Greedy exactly.
RunResult GreedyEps(const ApprovalProfile& profile, int k, double epsilon,
                    std::uint64_t seed);

struct SampleSize {
  double epsilon = 0.0;
  std::int64_t voters = 0;  // ℓ
};

// ε = (1-γ)e / (γ(e-1)), ℓ = ⌈(2/ε²) ln(2mk/δ)⌉.
SampleSize RequiredSampleSizeGreedy(double gamma, double delta, int m, int k);

// k · t · ⌈(m-k)/(t-k)⌉ · ℓ.
std::int64_t QueryBudgetGreedy(double gamma, double delta, int m, int k,
                               int t);

struct GreedyIncompleteOptions {
  int k = 0;
  int query_size = 0;  // t
  double gamma = 0.85;
  double delta = 0.05;
  // Replaces ℓ from RequiredSampleSizeGreedy (budgeted experiments).
  std::optional<std::int64_t> sample_override;
};

// Greedy driven by sampled answers: each round builds a query family around
// W, presents every set to ℓ sampled voters and adds the candidate with the
// largest estimated marginal gain.
RunResult GreedyIncomplete(QueryOracle& oracle,
                           const GreedyIncompleteOptions& options);

// β = C₂(1-γ)/(γ k ln k). Requires k >= 2, γ in (0,1), C₂ > 0.
double LocalSearchStep(double gamma, int k, double c2 = 1.0);

// Non-oblivious local search over `matroid`: from a random basis, performs
// the best valid exchange under the auxiliary objective while it improves
// by more than beta. `alphas` must cover the matroid rank.
RunResult LocalSearchBeta(const ApprovalProfile& profile,
                          const Matroid& matroid, double beta,
                          const AlphaSequence& alphas, std::uint64_t seed);

// ⌈ξ α_k / β⌉: the iteration cap of the sampled local search.
std::int64_t LocalSearchIterationCap(double beta, double xi, double alpha_k);

// ε = ((ξ-1)/(2ξ)) β,
// ℓ = ⌈((2-2/e)² / (2ε²)) ln(2(m-k)k ξ α_k / (δβ))⌉. Requires ξ > 1.
SampleSize RequiredSampleSizeLs(double beta, double xi, double delta, int m,
                                int k, double alpha_k);

// Iteration cap · t⌈(m-k)/(t-k)⌉ · ℓ.
std::int64_t QueryBudgetLs(double beta, double xi, double delta, int m, int k,
                           int t, double alpha_k);

struct LsIncompleteOptions {
  double beta = 0.0;
  int query_size = 0;  // t
  double delta = 0.05;
  double xi = 2.0;
  std::uint64_t seed = 0;  // initial basis
  std::optional<std::int64_t> sample_override;
};

// Local search driven by sampled answers. Stops when the best estimated
// improvement drops below β - ε or after LocalSearchIterationCap exchanges.
// Requires m >= t > k >= 3.
RunResult LsIncomplete(QueryOracle& oracle, const Matroid& matroid,
                       const LsIncompleteOptions& options,
                       const AlphaSequence& alphas);

// U = ⌈2 ln(nm/δ) / ln(1/(4p(1-p)))⌉ repetitions per query.
std::int64_t RequiredRepeatsInaccurate(double p, double delta, int n, int m);

// Queries every (voter, candidate) pair `repeats` times and keeps the
// majority answer; ties decode as disapprove.
ApprovalProfile DecodeByMajority(QueryOracle& oracle, std::int64_t repeats);

// Majority-decodes the whole profile with U repeats, then runs Greedy.
// Requires an inaccurate oracle.
RunResult GreedyInaccurate(QueryOracle& oracle, int k, double delta);

// The k candidates with most approvals.
RunResult ApprovalVoting(const ApprovalProfile& profile, int k);

// Local search on the PAV score from a random committee: repeatedly applies
// the first swap (lexicographic (in, out)) improving PAV by at least
// threshold_factor · n / k². threshold_factor must be positive.
RunResult LsPav(const ApprovalProfile& profile, int k,
                double threshold_factor, std::uint64_t seed);

inline constexpr std::int64_t kMaxExactOptSubsets = 1'000'000;

struct Optimum {
  Committee committee;
  int covered = 0;
  double score = 0.0;
};

// Brute-force maximiser of CC over all size-k committees (or all bases of
// `matroid`). Throws std::invalid_argument when there are more than
// kMaxExactOptSubsets candidate committees.
Optimum ExactOpt(const ApprovalProfile& profile, int k);
Optimum ExactOpt(const ApprovalProfile& profile, const Matroid& matroid);

// max(1, ⌊M·n / (rounds · ⌈(m-k)/(t-k)⌉)⌋): voters per query set so that
// each voter sees about M query sets over `rounds` querying rounds.
std::int64_t SampleSizeForBudget(double budget_m, int n, int m, int k, int t,
                                 int rounds);

}  // namespace divcom

#endif  // DIVCOM_ALGORITHMS_H_

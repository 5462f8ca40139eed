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

#ifndef DIVCOM_QUERY_ORACLE_H_
#define DIVCOM_QUERY_ORACLE_H_

#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "divcom/election.h"
#include "divcom/objectives.h"
#include "divcom/random.h"

namespace divcom {

enum class OracleMode { kExact, kInaccurate };

// Gated access to a hidden approval profile. Every (voter, candidate)
// lookup is counted. In inaccurate mode each returned bit is flipped
// independently with probability p on every call. One generator drives
// both voter sampling and noise, so a run is reproducible from its seed.
//
// Not thread-safe; use one oracle per algorithm run.
class QueryOracle {
 public:
  static QueryOracle Exact(const ApprovalProfile& profile, std::uint64_t seed);
  // Throws std::invalid_argument unless 0 < p < 1/2.
  static QueryOracle Inaccurate(const ApprovalProfile& profile, double p,
                                std::uint64_t seed);

  // In census mode SampleVoters ignores the requested count and returns
  // every voter exactly once, in index order.
  void set_census(bool census) { census_ = census; }
  bool census() const { return census_; }

  OracleMode mode() const { return mode_; }
  double error_rate() const { return error_rate_; }
  int num_voters() const { return profile_->num_voters(); }
  int num_candidates() const { return profile_->num_candidates(); }
  std::int64_t queries() const { return queries_; }
  std::uint64_t seed() const { return seed_; }

  // Bit r answers "does `voter` approve query[r]?". Counts |query| lookups.
  std::vector<std::uint8_t> Present(Voter voter,
                                    std::span<const Candidate> query);

  // Same as Present packed into a word; requires |query| <= 64.
  std::uint64_t PresentPattern(Voter voter, std::span<const Candidate> query);

  // `count` voters drawn uniformly with replacement (count >= 1).
  std::vector<Voter> SampleVoters(int count);

  // The hidden profile. For scoring results only; algorithms must not read it.
  const ApprovalProfile& ground_truth() const { return *profile_; }

 private:
  QueryOracle(const ApprovalProfile& profile, OracleMode mode, double p,
              std::uint64_t seed);

  void CheckQuery(Voter voter, std::span<const Candidate> query) const;
  bool Answer(Voter voter, Candidate candidate);

  const ApprovalProfile* profile_;
  OracleMode mode_;
  double error_rate_;
  std::uint64_t seed_;
  Rng rng_;
  bool census_ = false;
  std::int64_t queries_ = 0;
};

inline constexpr int kMaxQuerySize = 64;

// Query sets of size t, each containing W, jointly covering all candidates.
// Non-members are dealt out in index order, t - |W| per set; the last set is
// padded with the lowest-index non-members it does not already hold.
struct QueryFamily {
  std::vector<std::vector<Candidate>> sets;  // members of W first
  // For each candidate, the set that first received it as a non-member;
  // -1 for members of W.
  std::vector<int> owner;
  int query_size = 0;
};

// Throws std::invalid_argument unless |W| < t <= m.
QueryFamily BuildQueryFamily(int num_candidates, const Committee& w,
                             int query_size);

// ⌈(m - w) / (t - w)⌉ for committee size w.
std::int64_t QueryFamilySize(int num_candidates, int committee_size,
                             int query_size);

// Sampled answers to a single query set.
struct QueryResponses {
  std::vector<Candidate> query;
  std::vector<std::uint64_t> patterns;  // per sampled voter; bit r <-> query[r]
};

// Presents `query` (|query| <= 64) to each listed voter.
QueryResponses CollectResponses(QueryOracle& oracle,
                                std::span<const Candidate> query,
                                std::span<const Voter> voters);

// p̂_S: fraction of responses approving some member of `subset`. Throws
// std::invalid_argument if `subset` is not contained in the query or there
// are no responses.
double EstimateCoverage(const QueryResponses& responses,
                        std::span<const Candidate> subset);

// Empirical distribution of the exact approved subset of the query; keys are
// sorted candidate lists. Values sum to 1.
std::map<std::vector<Candidate>, double> EstimateExactPatterns(
    const QueryResponses& responses);

// Σ_S p̂_S α_{|S ∩ subset|}, the estimate of f(subset) for subset ⊆ query.
double EstimateAuxScore(const QueryResponses& responses,
                        std::span<const Candidate> subset,
                        const AlphaSequence& alphas);

}  // namespace divcom

#endif  // DIVCOM_QUERY_ORACLE_H_

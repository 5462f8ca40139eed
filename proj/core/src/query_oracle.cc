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

#include "divcom/query_oracle.h"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>
#include <string>

namespace divcom {

QueryOracle::QueryOracle(const ApprovalProfile& profile, OracleMode mode,
                         double p, std::uint64_t seed)
    : profile_(&profile), mode_(mode), error_rate_(p), seed_(seed), rng_(seed) {}

QueryOracle QueryOracle::Exact(const ApprovalProfile& profile,
                               std::uint64_t seed) {
  return QueryOracle(profile, OracleMode::kExact, 0.0, seed);
}

QueryOracle QueryOracle::Inaccurate(const ApprovalProfile& profile, double p,
                                    std::uint64_t seed) {
  if (!(p > 0.0 && p < 0.5)) {
    throw std::invalid_argument("inaccuracy p=" + std::to_string(p) +
                                " must lie in (0, 1/2)");
  }
  return QueryOracle(profile, OracleMode::kInaccurate, p, seed);
}

void QueryOracle::CheckQuery(Voter voter,
                             std::span<const Candidate> query) const {
  if (voter < 0 || voter >= num_voters()) {
    throw std::invalid_argument("voter index " + std::to_string(voter) +
                                " out of range");
  }
  if (query.empty()) throw std::invalid_argument("empty query set");
  for (Candidate c : query) {
    if (c < 0 || c >= num_candidates()) {
      throw std::invalid_argument("candidate index " + std::to_string(c) +
                                  " out of range");
    }
  }
}

bool QueryOracle::Answer(Voter voter, Candidate candidate) {
  const bool truth = profile_->Approves(voter, candidate);
  if (mode_ == OracleMode::kExact) return truth;
  return truth != rng_.Bernoulli(error_rate_);
}

std::vector<std::uint8_t> QueryOracle::Present(
    Voter voter, std::span<const Candidate> query) {
  CheckQuery(voter, query);
  std::vector<std::uint8_t> bits(query.size());
  for (std::size_t r = 0; r < query.size(); ++r) {
    bits[r] = Answer(voter, query[r]) ? 1 : 0;
  }
  queries_ += static_cast<std::int64_t>(query.size());
  return bits;
}

std::uint64_t QueryOracle::PresentPattern(Voter voter,
                                          std::span<const Candidate> query) {
  if (query.size() > kMaxQuerySize) {
    throw std::invalid_argument("packed queries hold at most 64 candidates");
  }
  CheckQuery(voter, query);
  std::uint64_t pattern = 0;
  for (std::size_t r = 0; r < query.size(); ++r) {
    if (Answer(voter, query[r])) pattern |= std::uint64_t{1} << r;
  }
  queries_ += static_cast<std::int64_t>(query.size());
  return pattern;
}

std::vector<Voter> QueryOracle::SampleVoters(int count) {
  if (count < 1) throw std::invalid_argument("sample size must be >= 1");
  std::vector<Voter> voters;
  if (census_) {
    voters.resize(num_voters());
    std::iota(voters.begin(), voters.end(), 0);
    return voters;
  }
  voters.reserve(count);
  for (int s = 0; s < count; ++s) {
    voters.push_back(static_cast<Voter>(rng_.Index(num_voters())));
  }
  return voters;
}

std::int64_t QueryFamilySize(int num_candidates, int committee_size,
                             int query_size) {
  const std::int64_t spare = query_size - committee_size;
  return (num_candidates - committee_size + spare - 1) / spare;
}

QueryFamily BuildQueryFamily(int num_candidates, const Committee& w,
                             int query_size) {
  if (w.num_candidates() != num_candidates) {
    throw std::invalid_argument("committee universe differs from m");
  }
  if (query_size <= w.size() || query_size > num_candidates) {
    throw std::invalid_argument("query size t=" + std::to_string(query_size) +
                                " must satisfy |W|=" +
                                std::to_string(w.size()) + " < t <= m=" +
                                std::to_string(num_candidates));
  }
  std::vector<Candidate> others;
  for (Candidate c = 0; c < num_candidates; ++c) {
    if (!w.Contains(c)) others.push_back(c);
  }
  const std::size_t spare = query_size - w.size();
  QueryFamily family;
  family.query_size = query_size;
  family.owner.assign(num_candidates, -1);
  for (std::size_t start = 0; start < others.size(); start += spare) {
    std::vector<Candidate> set(w.members().begin(), w.members().end());
    const std::size_t end = std::min(others.size(), start + spare);
    for (std::size_t r = start; r < end; ++r) {
      set.push_back(others[r]);
      family.owner[others[r]] = static_cast<int>(family.sets.size());
    }
    for (std::size_t r = 0; static_cast<int>(set.size()) < query_size; ++r) {
      if (r < start || r >= end) set.push_back(others[r]);
    }
    family.sets.push_back(std::move(set));
  }
  return family;
}

QueryResponses CollectResponses(QueryOracle& oracle,
                                std::span<const Candidate> query,
                                std::span<const Voter> voters) {
  QueryResponses responses;
  responses.query.assign(query.begin(), query.end());
  responses.patterns.reserve(voters.size());
  for (Voter v : voters) {
    responses.patterns.push_back(oracle.PresentPattern(v, query));
  }
  return responses;
}

namespace {

std::uint64_t SubsetMask(const QueryResponses& responses,
                         std::span<const Candidate> subset) {
  std::uint64_t mask = 0;
  for (Candidate c : subset) {
    const auto it =
        std::find(responses.query.begin(), responses.query.end(), c);
    if (it == responses.query.end()) {
      throw std::invalid_argument("candidate " + std::to_string(c) +
                                  " is not part of the query set");
    }
    mask |= std::uint64_t{1} << (it - responses.query.begin());
  }
  return mask;
}

void RequireResponses(const QueryResponses& responses) {
  if (responses.patterns.empty()) {
    throw std::invalid_argument("no sampled responses");
  }
}

}  // namespace

double EstimateCoverage(const QueryResponses& responses,
                        std::span<const Candidate> subset) {
  const std::uint64_t mask = SubsetMask(responses, subset);
  RequireResponses(responses);
  const auto hits = std::count_if(
      responses.patterns.begin(), responses.patterns.end(),
      [mask](std::uint64_t pattern) { return (pattern & mask) != 0; });
  return static_cast<double>(hits) / responses.patterns.size();
}

std::map<std::vector<Candidate>, double> EstimateExactPatterns(
    const QueryResponses& responses) {
  RequireResponses(responses);
  std::map<std::uint64_t, std::int64_t> tally;
  for (std::uint64_t pattern : responses.patterns) ++tally[pattern];
  std::map<std::vector<Candidate>, double> distribution;
  const double total = static_cast<double>(responses.patterns.size());
  for (const auto& [pattern, count] : tally) {
    std::vector<Candidate> subset;
    for (std::size_t r = 0; r < responses.query.size(); ++r) {
      if ((pattern >> r) & 1U) subset.push_back(responses.query[r]);
    }
    std::sort(subset.begin(), subset.end());
    distribution[std::move(subset)] = count / total;
  }
  return distribution;
}

double EstimateAuxScore(const QueryResponses& responses,
                        std::span<const Candidate> subset,
                        const AlphaSequence& alphas) {
  const std::uint64_t mask = SubsetMask(responses, subset);
  RequireResponses(responses);
  std::map<std::uint64_t, std::int64_t> tally;
  for (std::uint64_t pattern : responses.patterns) ++tally[pattern];
  double total = 0.0;
  for (const auto& [pattern, count] : tally) {
    const int level = std::popcount(pattern & mask);
    if (level > alphas.max_index()) {
      throw std::invalid_argument("coverage exceeds alpha sequence length");
    }
    total += static_cast<double>(count) / responses.patterns.size() *
             alphas[level];
  }
  return total;
}

}  // namespace divcom

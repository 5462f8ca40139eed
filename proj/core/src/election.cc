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

#include "divcom/election.h"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace divcom {

ApprovalProfile::ApprovalProfile(int num_candidates,
                                 std::vector<std::vector<Candidate>> ballots)
    : num_candidates_(num_candidates), ballots_(std::move(ballots)) {
  if (num_candidates_ < 1) {
    throw std::invalid_argument("approval profile needs m >= 1 candidates");
  }
  if (ballots_.empty()) {
    throw std::invalid_argument("approval profile needs n >= 1 voters");
  }
  words_ = (static_cast<std::size_t>(num_candidates_) + 63) / 64;
  bits_.assign(ballots_.size() * words_, 0);
  for (std::size_t i = 0; i < ballots_.size(); ++i) {
    auto& ballot = ballots_[i];
    std::sort(ballot.begin(), ballot.end());
    for (std::size_t r = 0; r < ballot.size(); ++r) {
      const Candidate c = ballot[r];
      if (c < 0 || c >= num_candidates_) {
        throw std::invalid_argument("voter " + std::to_string(i) +
                                    " approves out-of-range candidate " +
                                    std::to_string(c));
      }
      if (r > 0 && ballot[r - 1] == c) {
        throw std::invalid_argument("voter " + std::to_string(i) +
                                    " approves candidate " +
                                    std::to_string(c) + " twice");
      }
      bits_[i * words_ + (c >> 6)] |= std::uint64_t{1} << (c & 63);
    }
  }
}

std::int64_t ApprovalProfile::total_approvals() const {
  std::int64_t total = 0;
  for (const auto& ballot : ballots_) total += ballot.size();
  return total;
}

int ApprovalProfile::nonempty_ballots() const {
  return static_cast<int>(std::count_if(
      ballots_.begin(), ballots_.end(),
      [](const auto& ballot) { return !ballot.empty(); }));
}

Committee::Committee(int num_candidates, int capacity)
    : num_candidates_(num_candidates),
      capacity_(capacity),
      in_committee_(num_candidates > 0 ? num_candidates : 0, 0) {
  if (capacity < 0 || capacity > num_candidates) {
    throw std::invalid_argument("committee size k=" + std::to_string(capacity) +
                                " must satisfy 0 <= k <= m=" +
                                std::to_string(num_candidates));
  }
  members_.reserve(capacity);
}

Committee Committee::FromMembers(int num_candidates, int capacity,
                                 std::span<const Candidate> members) {
  Committee w(num_candidates, capacity);
  for (Candidate c : members) w.Add(c);
  return w;
}

void Committee::CheckIndex(Candidate candidate) const {
  if (candidate < 0 || candidate >= num_candidates_) {
    throw std::invalid_argument("invalid committee: candidate " +
                                std::to_string(candidate) + " not in [0, " +
                                std::to_string(num_candidates_) + ")");
  }
}

void Committee::Add(Candidate candidate) {
  CheckIndex(candidate);
  if (in_committee_[candidate]) {
    throw std::invalid_argument("candidate " + std::to_string(candidate) +
                                " is already in the committee");
  }
  if (full()) {
    throw std::invalid_argument("committee is full (k=" +
                                std::to_string(capacity_) + ")");
  }
  in_committee_[candidate] = 1;
  members_.push_back(candidate);
}

void Committee::Remove(Candidate candidate) {
  CheckIndex(candidate);
  if (!in_committee_[candidate]) {
    throw std::invalid_argument("candidate " + std::to_string(candidate) +
                                " is not in the committee");
  }
  in_committee_[candidate] = 0;
  members_.erase(std::find(members_.begin(), members_.end(), candidate));
}

void Committee::Swap(Candidate in, Candidate out) {
  CheckIndex(in);
  CheckIndex(out);
  if (!in_committee_[out] || in_committee_[in]) {
    throw std::invalid_argument("swap requires out in W and in not in W");
  }
  *std::find(members_.begin(), members_.end(), out) = in;
  in_committee_[out] = 0;
  in_committee_[in] = 1;
}

std::vector<Candidate> Committee::SortedMembers() const {
  std::vector<Candidate> sorted = members_;
  std::sort(sorted.begin(), sorted.end());
  return sorted;
}

void ValidateCommittee(const ApprovalProfile& profile, const Committee& w) {
  if (w.num_candidates() != profile.num_candidates()) {
    throw std::invalid_argument(
        "invalid committee: defined over " +
        std::to_string(w.num_candidates()) + " candidates, profile has " +
        std::to_string(profile.num_candidates()));
  }
}

namespace {

bool HitsCommittee(std::span<const Candidate> ballot, const Committee& w) {
  return std::any_of(ballot.begin(), ballot.end(),
                     [&](Candidate c) { return w.Contains(c); });
}

}  // namespace

int CoveredVoters(const ApprovalProfile& profile, const Committee& w) {
  ValidateCommittee(profile, w);
  int covered = 0;
  for (Voter i = 0; i < profile.num_voters(); ++i) {
    covered += HitsCommittee(profile.ballot(i), w) ? 1 : 0;
  }
  return covered;
}

double CcScore(const ApprovalProfile& profile, const Committee& w) {
  return static_cast<double>(CoveredVoters(profile, w)) /
         profile.num_voters();
}

int MarginalGainCount(const ApprovalProfile& profile, const Committee& w,
                      Candidate candidate) {
  ValidateCommittee(profile, w);
  if (candidate < 0 || candidate >= profile.num_candidates()) {
    throw std::invalid_argument("candidate index out of range");
  }
  if (w.Contains(candidate)) {
    throw std::invalid_argument("marginal gain of a committee member");
  }
  int gain = 0;
  for (Voter i = 0; i < profile.num_voters(); ++i) {
    if (profile.Approves(i, candidate) && !HitsCommittee(profile.ballot(i), w)) {
      ++gain;
    }
  }
  return gain;
}

double MarginalGain(const ApprovalProfile& profile, const Committee& w,
                    Candidate candidate) {
  return static_cast<double>(MarginalGainCount(profile, w, candidate)) /
         profile.num_voters();
}

std::vector<int> MarginalGainCounts(const ApprovalProfile& profile,
                                    const Committee& w) {
  ValidateCommittee(profile, w);
  std::vector<int> gains(profile.num_candidates(), 0);
  for (Voter i = 0; i < profile.num_voters(); ++i) {
    const auto ballot = profile.ballot(i);
    if (HitsCommittee(ballot, w)) continue;
    for (Candidate c : ballot) ++gains[c];
  }
  return gains;
}

CoverageVector Coverage(const ApprovalProfile& profile, const Committee& w) {
  ValidateCommittee(profile, w);
  CoverageVector h(profile.num_voters(), 0);
  for (Voter i = 0; i < profile.num_voters(); ++i) {
    for (Candidate c : profile.ballot(i)) h[i] += w.Contains(c) ? 1 : 0;
  }
  return h;
}

std::vector<int> ApprovalCounts(const ApprovalProfile& profile) {
  std::vector<int> counts(profile.num_candidates(), 0);
  for (const auto& ballot : profile.ballots()) {
    for (Candidate c : ballot) ++counts[c];
  }
  return counts;
}

}  // namespace divcom

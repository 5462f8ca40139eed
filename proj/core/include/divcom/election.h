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

#ifndef DIVCOM_ELECTION_H_
#define DIVCOM_ELECTION_H_

#include <cstdint>
#include <span>
#include <vector>

namespace divcom {

using Candidate = int;
using Voter = int;

// Ground-truth approval ballots: voter i approves the candidates in
// ballot(i). Candidates and voters are dense 0-based indices. Immutable.
class ApprovalProfile {
 public:
  // Ballots are sorted on construction. Throws std::invalid_argument when a
  // ballot holds an index outside [0, num_candidates) or a duplicate, or
  // when there are no voters or no candidates.
  ApprovalProfile(int num_candidates,
                  std::vector<std::vector<Candidate>> ballots);

  int num_voters() const { return static_cast<int>(ballots_.size()); }
  int num_candidates() const { return num_candidates_; }

  std::span<const Candidate> ballot(Voter voter) const {
    return ballots_[voter];
  }
  const std::vector<std::vector<Candidate>>& ballots() const {
    return ballots_;
  }

  bool Approves(Voter voter, Candidate candidate) const {
    const std::uint64_t word =
        bits_[static_cast<std::size_t>(voter) * words_ + (candidate >> 6)];
    return (word >> (candidate & 63)) & 1U;
  }

  std::int64_t total_approvals() const;

  // Number of voters with a nonempty ballot.
  int nonempty_ballots() const;

  friend bool operator==(const ApprovalProfile& a, const ApprovalProfile& b) {
    return a.num_candidates_ == b.num_candidates_ && a.ballots_ == b.ballots_;
  }

 private:
  int num_candidates_;
  std::vector<std::vector<Candidate>> ballots_;
  std::size_t words_;
  std::vector<std::uint64_t> bits_;
};

// A set of at most `capacity` distinct candidates out of `num_candidates`.
// Members keep insertion order; Swap() replaces in place.
class Committee {
 public:
  Committee(int num_candidates, int capacity);

  static Committee FromMembers(int num_candidates, int capacity,
                               std::span<const Candidate> members);

  void Add(Candidate candidate);
  void Remove(Candidate candidate);
  // Replaces `out` (a member) by `in` (a non-member) at the same position.
  void Swap(Candidate in, Candidate out);

  bool Contains(Candidate candidate) const {
    return candidate >= 0 && candidate < num_candidates_ &&
           in_committee_[candidate] != 0;
  }

  std::span<const Candidate> members() const { return members_; }
  std::vector<Candidate> SortedMembers() const;

  int size() const { return static_cast<int>(members_.size()); }
  int capacity() const { return capacity_; }
  int num_candidates() const { return num_candidates_; }
  bool full() const { return size() == capacity_; }

  // Set equality; insertion order is ignored.
  friend bool operator==(const Committee& a, const Committee& b) {
    return a.num_candidates_ == b.num_candidates_ &&
           a.in_committee_ == b.in_committee_;
  }

 private:
  void CheckIndex(Candidate candidate) const;

  int num_candidates_;
  int capacity_;
  std::vector<Candidate> members_;
  std::vector<char> in_committee_;
};

// h_i(W) for every voter i.
using CoverageVector = std::vector<int>;

// Throws std::invalid_argument ("invalid committee") when the committee is
// defined over a different candidate universe than the profile.
void ValidateCommittee(const ApprovalProfile& profile, const Committee& w);

// |{i : A(i) ∩ W != ∅}|. Algorithms compare these integer counts.
int CoveredVoters(const ApprovalProfile& profile, const Committee& w);

// Chamberlin-Courant score CoveredVoters / n, in [0, 1].
double CcScore(const ApprovalProfile& profile, const Committee& w);

// Number of voters approving `candidate` and no member of `w`. Throws
// std::invalid_argument if `candidate` is already in `w`.
int MarginalGainCount(const ApprovalProfile& profile, const Committee& w,
                      Candidate candidate);
double MarginalGain(const ApprovalProfile& profile, const Committee& w,
                    Candidate candidate);

// Marginal gain counts for all candidates in one pass; members get 0.
std::vector<int> MarginalGainCounts(const ApprovalProfile& profile,
                                    const Committee& w);

CoverageVector Coverage(const ApprovalProfile& profile, const Committee& w);

// count_j = |{i : j ∈ A(i)}|.
std::vector<int> ApprovalCounts(const ApprovalProfile& profile);

}  // namespace divcom

#endif  // DIVCOM_ELECTION_H_

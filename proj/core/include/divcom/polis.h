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

#ifndef DIVCOM_POLIS_H_
#define DIVCOM_POLIS_H_

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "divcom/election.h"

namespace divcom {

enum class Vote : std::uint8_t { kApprove, kDisapprove, kNeutral, kMissing };

// Participants x statements vote matrix with external identifiers.
struct RawVoteMatrix {
  std::vector<std::string> participant_ids;
  std::vector<std::string> statement_ids;
  std::vector<Vote> votes;  // row-major

  int num_participants() const {
    return static_cast<int>(participant_ids.size());
  }
  int num_statements() const { return static_cast<int>(statement_ids.size()); }
  Vote at(int participant, int statement) const {
    return votes[static_cast<std::size_t>(participant) * statement_ids.size() +
                 statement];
  }

  friend bool operator==(const RawVoteMatrix&, const RawVoteMatrix&) = default;
};

// Cell text -> vote. The default follows the Polis participants-votes
// export: 1 agree, -1 disagree, 0 pass, empty cell not seen.
struct VoteCodes {
  std::map<std::string, Vote> codes = {{"1", Vote::kApprove},
                                       {"-1", Vote::kDisapprove},
                                       {"0", Vote::kNeutral},
                                       {"", Vote::kMissing}};
};

// Comma-separated votes, one row per participant. If the first cell of the
// first row is not a vote code, that row is a header: column 0 then holds
// participant IDs, columns with integer headers are statements, and all
// other columns (group-id, n-votes, ...) are skipped. Without a header every
// column is a statement and IDs are 0-based positions.
//
// Throws ParseError for an empty input, ragged rows or unknown codes; the
// message gives the 1-based line and column.
RawVoteMatrix ParseVotes(std::istream& in, const VoteCodes& codes = {});
RawVoteMatrix LoadVotes(const std::filesystem::path& path,
                        const VoteCodes& codes = {});

// Header "participant,<statement ids>" then one row per participant, using
// the first code listed for each vote. ParseVotes reads it back unchanged.
void WriteVotes(std::ostream& out, const RawVoteMatrix& matrix,
                const VoteCodes& codes = {});

struct PreprocessReport {
  int original_voters = 0;
  int original_statements = 0;
  int removed_statements = 0;           // approved by more than half
  int removed_voters_no_votes = 0;      // no vote on any statement
  int removed_voters_no_approvals = 0;  // voted, approved none retained
  std::int64_t filled_entries = 0;      // neutral or missing -> disapprove
  int final_voters = 0;
  int final_statements = 0;
  int passes = 0;
};

struct PreprocessOptions {
  // Repeat statement and voter removal until nothing changes, which makes
  // Preprocess idempotent. The default single pass measures majorities on
  // the original participants only.
  bool until_stable = false;
};

struct PreprocessResult {
  ApprovalProfile profile;
  PreprocessReport report;
  std::vector<std::string> voter_ids;
  std::vector<std::string> statement_ids;
};

// 1. drop statements approved by more than half of the voters;
// 2. drop voters without any vote and voters approving no retained statement;
// 3. read neutral and missing votes as disapprove.
// Throws std::invalid_argument when no voter or no statement survives.
PreprocessResult Preprocess(const RawVoteMatrix& raw,
                            const PreprocessOptions& options = {});

// Approve/disapprove matrix of a profile, IDs are positions.
RawVoteMatrix ToRawMatrix(const ApprovalProfile& profile);

}  // namespace divcom

#endif  // DIVCOM_POLIS_H_

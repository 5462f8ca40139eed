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

#include "divcom/polis.h"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <string_view>

#include "divcom/profile_io.h"

namespace divcom {
namespace {

std::string Trim(std::string_view text) {
  const auto first = text.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = text.find_last_not_of(" \t\r");
  return std::string(text.substr(first, last - first + 1));
}

std::vector<std::string> SplitCsv(std::string_view line) {
  std::vector<std::string> cells;
  std::size_t start = 0;
  for (std::size_t pos = 0; pos <= line.size(); ++pos) {
    if (pos == line.size() || line[pos] == ',') {
      cells.push_back(Trim(line.substr(start, pos - start)));
      start = pos + 1;
    }
  }
  return cells;
}

bool IsInteger(const std::string& text) {
  long long value = 0;
  const auto [end, error] =
      std::from_chars(text.data(), text.data() + text.size(), value);
  return !text.empty() && error == std::errc() &&
         end == text.data() + text.size();
}

std::string Where(int line, int column) {
  return "line " + std::to_string(line) + ", column " + std::to_string(column);
}

}  // namespace

RawVoteMatrix ParseVotes(std::istream& in, const VoteCodes& codes) {
  std::vector<std::vector<std::string>> rows;
  std::vector<int> line_numbers;
  std::string line;
  for (int number = 1; std::getline(in, line); ++number) {
    if (Trim(line).empty()) continue;
    rows.push_back(SplitCsv(line));
    line_numbers.push_back(number);
  }
  if (rows.empty()) throw ParseError("no data rows");

  RawVoteMatrix matrix;
  std::vector<int> statement_columns;
  std::size_t first_data = 0;
  int id_column = -1;
  const bool header = !codes.codes.contains(rows[0][0]);
  if (header) {
    first_data = 1;
    id_column = 0;
    for (std::size_t col = 1; col < rows[0].size(); ++col) {
      if (IsInteger(rows[0][col])) {
        statement_columns.push_back(static_cast<int>(col));
        matrix.statement_ids.push_back(rows[0][col]);
      }
    }
  } else {
    for (std::size_t col = 0; col < rows[0].size(); ++col) {
      statement_columns.push_back(static_cast<int>(col));
      matrix.statement_ids.push_back(std::to_string(col));
    }
  }
  if (rows.size() == first_data) throw ParseError("no data rows");

  const std::size_t width = rows[0].size();
  for (std::size_t r = first_data; r < rows.size(); ++r) {
    const auto& row = rows[r];
    if (row.size() != width) {
      throw ParseError("line " + std::to_string(line_numbers[r]) + ": " +
                       std::to_string(row.size()) + " columns, expected " +
                       std::to_string(width));
    }
    matrix.participant_ids.push_back(
        id_column >= 0 ? row[id_column]
                       : std::to_string(matrix.participant_ids.size()));
    for (int col : statement_columns) {
      const auto it = codes.codes.find(row[col]);
      if (it == codes.codes.end()) {
        throw ParseError(Where(line_numbers[r], col + 1) +
                         ": unknown vote code '" + row[col] + "'");
      }
      matrix.votes.push_back(it->second);
    }
  }
  return matrix;
}

RawVoteMatrix LoadVotes(const std::filesystem::path& path,
                        const VoteCodes& codes) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read " + path.string());
  try {
    return ParseVotes(in, codes);
  } catch (const ParseError& error) {
    throw ParseError(path.string() + ": " + error.what());
  }
}

void WriteVotes(std::ostream& out, const RawVoteMatrix& matrix,
                const VoteCodes& codes) {
  std::map<Vote, std::string> text;
  for (const auto& [code, vote] : codes.codes) text.try_emplace(vote, code);
  out << "participant";
  for (const auto& id : matrix.statement_ids) out << ',' << id;
  out << '\n';
  for (int p = 0; p < matrix.num_participants(); ++p) {
    out << matrix.participant_ids[p];
    for (int s = 0; s < matrix.num_statements(); ++s) {
      const auto it = text.find(matrix.at(p, s));
      if (it == text.end()) {
        throw std::invalid_argument("vote without a code in the mapping");
      }
      out << ',' << it->second;
    }
    out << '\n';
  }
}

PreprocessResult Preprocess(const RawVoteMatrix& raw,
                            const PreprocessOptions& options) {
  const int n = raw.num_participants();
  const int m = raw.num_statements();
  PreprocessReport report;
  report.original_voters = n;
  report.original_statements = m;

  std::vector<char> keep_voter(n, 1);
  std::vector<char> keep_statement(m, 1);
  for (int p = 0; p < n; ++p) {
    bool voted = false;
    for (int s = 0; s < m && !voted; ++s) voted = raw.at(p, s) != Vote::kMissing;
    if (!voted) {
      keep_voter[p] = 0;
      ++report.removed_voters_no_votes;
    }
  }

  // Pass 1 measures majorities on all participants, as listed in the raw
  // matrix; later passes (until_stable) on the retained voters.
  bool changed = true;
  while (changed) {
    changed = false;
    ++report.passes;
    int voters = 0;
    for (int p = 0; p < n; ++p) {
      voters += (report.passes == 1 || keep_voter[p]) ? 1 : 0;
    }
    for (int s = 0; s < m; ++s) {
      if (!keep_statement[s]) continue;
      int approvals = 0;
      for (int p = 0; p < n; ++p) {
        if ((report.passes == 1 || keep_voter[p]) &&
            raw.at(p, s) == Vote::kApprove) {
          ++approvals;
        }
      }
      if (2 * approvals > voters) {
        keep_statement[s] = 0;
        ++report.removed_statements;
        changed = true;
      }
    }
    for (int p = 0; p < n; ++p) {
      if (!keep_voter[p]) continue;
      bool approves = false;
      for (int s = 0; s < m && !approves; ++s) {
        approves = keep_statement[s] && raw.at(p, s) == Vote::kApprove;
      }
      if (!approves) {
        keep_voter[p] = 0;
        ++report.removed_voters_no_approvals;
        changed = true;
      }
    }
    if (!options.until_stable) break;
  }

  std::vector<int> statement_index(m, -1);
  std::vector<std::string> statement_ids;
  for (int s = 0; s < m; ++s) {
    if (keep_statement[s]) {
      statement_index[s] = static_cast<int>(statement_ids.size());
      statement_ids.push_back(raw.statement_ids[s]);
    }
  }
  std::vector<std::string> voter_ids;
  std::vector<std::vector<Candidate>> ballots;
  for (int p = 0; p < n; ++p) {
    if (!keep_voter[p]) continue;
    voter_ids.push_back(raw.participant_ids[p]);
    auto& ballot = ballots.emplace_back();
    for (int s = 0; s < m; ++s) {
      if (!keep_statement[s]) continue;
      const Vote vote = raw.at(p, s);
      if (vote == Vote::kApprove) {
        ballot.push_back(statement_index[s]);
      } else if (vote != Vote::kDisapprove) {
        ++report.filled_entries;
      }
    }
  }
  if (statement_ids.empty()) {
    throw std::invalid_argument("preprocessing removed every statement");
  }
  if (ballots.empty()) {
    throw std::invalid_argument(
        "preprocessing removed every voter (empty profile)");
  }
  report.final_voters = static_cast<int>(ballots.size());
  report.final_statements = static_cast<int>(statement_ids.size());
  return PreprocessResult{
      ApprovalProfile(report.final_statements, std::move(ballots)), report,
      std::move(voter_ids), std::move(statement_ids)};
}

RawVoteMatrix ToRawMatrix(const ApprovalProfile& profile) {
  RawVoteMatrix matrix;
  for (Voter i = 0; i < profile.num_voters(); ++i) {
    matrix.participant_ids.push_back(std::to_string(i));
  }
  for (Candidate c = 0; c < profile.num_candidates(); ++c) {
    matrix.statement_ids.push_back(std::to_string(c));
  }
  matrix.votes.reserve(static_cast<std::size_t>(profile.num_voters()) *
                       profile.num_candidates());
  for (Voter i = 0; i < profile.num_voters(); ++i) {
    for (Candidate c = 0; c < profile.num_candidates(); ++c) {
      matrix.votes.push_back(profile.Approves(i, c) ? Vote::kApprove
                                                    : Vote::kDisapprove);
    }
  }
  return matrix;
}

}  // namespace divcom

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

#include "divcom/profile_io.h"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string_view>
#include <vector>

namespace divcom {
namespace {

std::string_view Trim(std::string_view text) {
  const auto first = text.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = text.find_last_not_of(" \t\r");
  return text.substr(first, last - first + 1);
}

int ParseInt(std::string_view token, int line) {
  int value = 0;
  const auto [end, error] =
      std::from_chars(token.data(), token.data() + token.size(), value);
  if (error != std::errc() || end != token.data() + token.size()) {
    throw ParseError("line " + std::to_string(line) + ": expected integer, got '" +
                     std::string(token) + "'");
  }
  return value;
}

std::vector<int> ParseIntList(std::string_view text, int line) {
  std::vector<int> values;
  std::size_t pos = 0;
  while (pos < text.size()) {
    while (pos < text.size() &&
           (text[pos] == ' ' || text[pos] == ',' || text[pos] == '\t' ||
            text[pos] == '\r')) {
      ++pos;
    }
    std::size_t end = pos;
    while (end < text.size() && text[end] != ' ' && text[end] != ',' &&
           text[end] != '\t' && text[end] != '\r') {
      ++end;
    }
    if (end > pos) values.push_back(ParseInt(text.substr(pos, end - pos), line));
    pos = end;
  }
  return values;
}

}  // namespace

void WriteProfile(std::ostream& out, const ApprovalProfile& profile) {
  out << profile.num_voters() << ' ' << profile.num_candidates() << '\n';
  for (const auto& ballot : profile.ballots()) {
    for (std::size_t r = 0; r < ballot.size(); ++r) {
      out << (r ? " " : "") << ballot[r];
    }
    out << '\n';
  }
}

ApprovalProfile ReadProfile(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw ParseError("line 1: missing 'n m' header");
  const std::vector<int> header = ParseIntList(line, 1);
  if (header.size() != 2 || header[0] < 1 || header[1] < 1) {
    throw ParseError("line 1: header must be 'n m' with n, m >= 1");
  }
  const int n = header[0];
  const int m = header[1];
  std::vector<std::vector<Candidate>> ballots;
  ballots.reserve(n);
  for (int i = 0; i < n; ++i) {
    if (!std::getline(in, line)) {
      throw ParseError("line " + std::to_string(i + 2) + ": expected " +
                       std::to_string(n) + " voter lines, file ends after " +
                       std::to_string(i));
    }
    ballots.push_back(ParseIntList(line, i + 2));
    for (int c : ballots.back()) {
      if (c < 0 || c >= m) {
        throw ParseError("line " + std::to_string(i + 2) + ": candidate " +
                         std::to_string(c) + " outside [0, " +
                         std::to_string(m) + ")");
      }
    }
  }
  while (std::getline(in, line)) {
    if (!Trim(line).empty()) {
      throw ParseError("trailing data after " + std::to_string(n) +
                       " voter lines");
    }
  }
  try {
    return ApprovalProfile(m, std::move(ballots));
  } catch (const std::invalid_argument& error) {
    throw ParseError(error.what());
  }
}

void SaveProfile(const std::filesystem::path& path,
                 const ApprovalProfile& profile) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  WriteProfile(out, profile);
  if (!out) throw std::runtime_error("write failed for " + path.string());
}

ApprovalProfile LoadProfile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path.string());
  try {
    return ReadProfile(in);
  } catch (const ParseError& error) {
    throw ParseError(path.string() + ": " + error.what());
  }
}

QuotaSpec ReadQuotaSpec(std::istream& in, int num_candidates,
                        int committee_size) {
  QuotaSpec spec;
  spec.num_candidates = num_candidates;
  spec.committee_size = committee_size;
  std::string raw;
  for (int line = 1; std::getline(in, raw); ++line) {
    const std::string_view text = Trim(raw);
    if (text.empty() || text.front() == '#') continue;
    std::vector<std::string_view> fields;
    std::size_t start = 0;
    for (std::size_t pos = 0; pos <= text.size(); ++pos) {
      if (pos == text.size() || text[pos] == ':') {
        fields.push_back(Trim(text.substr(start, pos - start)));
        start = pos + 1;
      }
    }
    if (fields.size() != 4 || fields[0].empty()) {
      throw ParseError("line " + std::to_string(line) +
                       ": expected 'name: indices : lower : upper'");
    }
    QuotaGroup group;
    group.name = std::string(fields[0]);
    group.members = ParseIntList(fields[1], line);
    group.lower = ParseInt(fields[2], line);
    group.upper = ParseInt(fields[3], line);
    spec.groups.push_back(std::move(group));
  }
  return spec;
}

QuotaSpec LoadQuotaSpec(const std::filesystem::path& path, int num_candidates,
                        int committee_size) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read " + path.string());
  return ReadQuotaSpec(in, num_candidates, committee_size);
}

}  // namespace divcom

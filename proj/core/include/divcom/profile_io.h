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

#ifndef DIVCOM_PROFILE_IO_H_
#define DIVCOM_PROFILE_IO_H_

#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>

#include "divcom/election.h"
#include "divcom/matroid.h"

namespace divcom {

// Malformed input; the message carries the line (and column, where known).
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Canonical profile format:
//
//   n m
//   <approved indices of voter 0, space separated; empty line if none>
//   ...
//
// Writing then reading reproduces the profile exactly, and writing is
// byte-deterministic.
void WriteProfile(std::ostream& out, const ApprovalProfile& profile);
ApprovalProfile ReadProfile(std::istream& in);

void SaveProfile(const std::filesystem::path& path,
                 const ApprovalProfile& profile);
ApprovalProfile LoadProfile(const std::filesystem::path& path);

// Quota config, one group per line:
//
//   group-name: 0, 1, 2 : lower : upper
//
// Indices may be separated by commas or spaces. Blank lines and lines
// starting with '#' are skipped.
QuotaSpec ReadQuotaSpec(std::istream& in, int num_candidates,
                        int committee_size);
QuotaSpec LoadQuotaSpec(const std::filesystem::path& path, int num_candidates,
                        int committee_size);

}  // namespace divcom

#endif  // DIVCOM_PROFILE_IO_H_

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

#ifndef DIVCOM_TOOLS_INGEST_H_
#define DIVCOM_TOOLS_INGEST_H_

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "divcom/polis.h"

namespace divcom::tools {

// "participants-votes.csv" files are named after their directory (the
// open-data layout), any other file after its stem.
std::string DatasetIdOf(const std::filesystem::path& file);

// One dataset id per line; blank lines and '#' comments are skipped.
std::set<std::string> ReadManifest(const std::filesystem::path& path);

// <dir>/*/participants-votes.csv and <dir>/*.csv, sorted by path.
std::vector<std::filesystem::path> FindVoteFiles(
    const std::filesystem::path& dir);

// "code=state,..." with states approve, disapprove, neutral, missing, e.g.
// "1=approve,-1=disapprove,0=neutral,=missing". Replaces the default map.
VoteCodes ParseCodeMap(const std::string& text);

struct IngestedDataset {
  std::string id;
  std::filesystem::path source;
  PreprocessResult preprocessed;
  double q = 0.0;    // mean approval fraction
  double phi = 0.0;  // FitPhi at the aggregate q
};

struct IngestSummary {
  std::vector<IngestedDataset> datasets;
  std::vector<std::string> skipped;  // not in the manifest
  double q = 0.0;    // mean of per-dataset q
  double phi = 0.0;  // mean of per-dataset φ fitted at the mean q
};

// Parses and preprocesses every file, skipping (with a notice on `log`)
// datasets absent from a given manifest. Parse errors name the file.
IngestSummary Ingest(const std::vector<std::filesystem::path>& files,
                     const std::optional<std::set<std::string>>& manifest,
                     const VoteCodes& codes, const PreprocessOptions& options,
                     std::ostream& log);

}  // namespace divcom::tools

#endif  // DIVCOM_TOOLS_INGEST_H_

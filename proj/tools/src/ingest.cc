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

#include "divcom_tools/ingest.h"

#include <algorithm>
#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "divcom/datagen.h"
#include "divcom/profile_io.h"

namespace divcom::tools {
namespace {

std::string Trim(const std::string& text) {
  const auto first = text.find_first_not_of(" \t\r");
  if (first == std::string::npos) return {};
  return text.substr(first, text.find_last_not_of(" \t\r") - first + 1);
}

}  // namespace

std::string DatasetIdOf(const std::filesystem::path& file) {
  if (file.filename() == "participants-votes.csv" &&
      file.has_parent_path() && !file.parent_path().filename().empty()) {
    return file.parent_path().filename().string();
  }
  return file.stem().string();
}

std::set<std::string> ReadManifest(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read manifest " + path.string());
  std::set<std::string> ids;
  std::string line;
  while (std::getline(in, line)) {
    line = Trim(line);
    if (line.empty() || line[0] == '#') continue;
    ids.insert(line);
  }
  return ids;
}

std::vector<std::filesystem::path> FindVoteFiles(
    const std::filesystem::path& dir) {
  namespace fs = std::filesystem;
  if (!fs::is_directory(dir)) {
    throw std::runtime_error(dir.string() + " is not a directory");
  }
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (entry.is_directory()) {
      const fs::path votes = entry.path() / "participants-votes.csv";
      if (fs::is_regular_file(votes)) files.push_back(votes);
    } else if (entry.path().extension() == ".csv") {
      files.push_back(entry.path());
    }
  }
  std::sort(files.begin(), files.end());
  return files;
}

VoteCodes ParseCodeMap(const std::string& text) {
  VoteCodes codes;
  codes.codes.clear();
  std::stringstream stream(text);
  std::string item;
  while (std::getline(stream, item, ',')) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) {
      throw std::invalid_argument("code map entry '" + item +
                                  "' is not code=state");
    }
    const std::string code = Trim(item.substr(0, eq));
    const std::string state = Trim(item.substr(eq + 1));
    Vote vote;
    if (state == "approve") {
      vote = Vote::kApprove;
    } else if (state == "disapprove") {
      vote = Vote::kDisapprove;
    } else if (state == "neutral") {
      vote = Vote::kNeutral;
    } else if (state == "missing") {
      vote = Vote::kMissing;
    } else {
      throw std::invalid_argument("unknown vote state '" + state + "'");
    }
    if (!codes.codes.emplace(code, vote).second) {
      throw std::invalid_argument("code '" + code + "' mapped twice");
    }
  }
  if (codes.codes.empty()) throw std::invalid_argument("empty code map");
  return codes;
}

IngestSummary Ingest(const std::vector<std::filesystem::path>& files,
                     const std::optional<std::set<std::string>>& manifest,
                     const VoteCodes& codes, const PreprocessOptions& options,
                     std::ostream& log) {
  IngestSummary summary;
  for (const auto& file : files) {
    const std::string id = DatasetIdOf(file);
    if (manifest && !manifest->contains(id)) {
      log << "skipping " << id << ": not in manifest\n";
      summary.skipped.push_back(id);
      continue;
    }
    const RawVoteMatrix raw = LoadVotes(file, codes);
    auto preprocess = [&] {
      try {
        return Preprocess(raw, options);
      } catch (const std::invalid_argument& error) {
        throw std::invalid_argument(file.string() + ": " + error.what());
      }
    };
    IngestedDataset dataset{
        .id = id, .source = file, .preprocessed = preprocess()};
    dataset.q = FitQ(dataset.preprocessed.profile);
    summary.datasets.push_back(std::move(dataset));
  }
  if (summary.datasets.empty()) return summary;
  for (const auto& dataset : summary.datasets) summary.q += dataset.q;
  summary.q /= summary.datasets.size();
  const std::vector<double> grid = PhiGrid();
  for (auto& dataset : summary.datasets) {
    dataset.phi = FitPhi(dataset.preprocessed.profile, summary.q, grid);
    summary.phi += dataset.phi;
  }
  summary.phi /= summary.datasets.size();
  return summary;
}

}  // namespace divcom::tools

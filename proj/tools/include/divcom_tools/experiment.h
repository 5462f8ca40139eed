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

#ifndef DIVCOM_TOOLS_EXPERIMENT_H_
#define DIVCOM_TOOLS_EXPERIMENT_H_

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "divcom/algorithms.h"
#include "divcom/election.h"
#include "divcom/matroid.h"

namespace divcom::tools {

// Algorithm identifiers accepted by `run` and `experiment`.
inline constexpr const char* kGreedy = "greedy";
inline constexpr const char* kGreedyEps = "greedy_eps";
inline constexpr const char* kApprovalVoting = "approval_voting";
inline constexpr const char* kLsPav = "ls_pav";
inline constexpr const char* kLocalSearch = "local_search";
inline constexpr const char* kGreedyIncomplete = "greedy_incomplete";
inline constexpr const char* kLsIncomplete = "ls_incomplete";
inline constexpr const char* kGreedyInaccurate = "greedy_inaccurate";
inline constexpr const char* kExact = "exact";

const std::vector<std::string>& KnownAlgorithms();
bool IsKnownAlgorithm(const std::string& id);
// Algorithms that query voters through sampled query sets.
bool IsIncomplete(const std::string& id);
// Complete-information counterpart of an algorithm (itself if complete).
std::string Counterpart(const std::string& id);

struct AlgorithmParams {
  int k = 0;
  int t = 20;
  double gamma = 0.85;
  double delta = 0.05;
  double xi = 2.0;
  double c2 = 1.0;
  std::optional<double> beta;  // default LocalSearchStep(gamma, k, c2)
  double eps = 0.1;            // greedy_eps tolerance, fraction of n
  double pav_threshold = 1.0;  // ls_pav swap threshold, units of n/k²
  double p = 0.0;              // answer flip probability
  std::optional<double> budget;  // M; unset -> ℓ from the guarantees
  bool census = false;           // ask every voter once per query set
  std::optional<QuotaSpec> quotas;
};

double EffectiveBeta(const AlgorithmParams& params);

// Seeds of a single run. `init` only drives the initial basis of the local
// searches so that sampled and complete runs start from the same committee.
struct RunSeeds {
  std::uint64_t run = 0;
  std::uint64_t init = 0;
};

// Runs `algorithm` on `profile`; scores are measured on `profile`.
// Incomplete algorithms and p > 0 go through a QueryOracle. For p > 0 the
// complete-information algorithms first read every (voter, candidate) pair
// once through the noisy oracle and then run on what they saw. Throws
// std::invalid_argument on unknown ids and violated preconditions.
RunResult RunAlgorithm(const ApprovalProfile& profile,
                       const std::string& algorithm,
                       const AlgorithmParams& params, const RunSeeds& seeds);

struct Dataset {
  std::string id;
  ApprovalProfile profile;
};

struct ExperimentConfig {
  std::vector<Dataset> datasets;
  std::vector<std::string> algorithms;
  AlgorithmParams params;  // budget, p and census are set per cell
  std::vector<double> budgets = {1, 2, 3, 4, 5};  // M levels
  std::vector<double> error_rates = {0.0};          // p levels
  bool census = false;
  int trials = 1;
  std::uint64_t base_seed = 0;
  bool timing = false;
  int threads = 1;
};

struct ExperimentRecord {
  std::string dataset;
  std::string algorithm;
  int k = 0;
  std::string budget;  // "full", "census" or the M level
  double p = 0.0;
  int trial = 0;
  std::uint64_t seed = 0;
  double cc = 0.0;
  double relative = 0.0;
  std::int64_t queries = 0;
  double ms = 0.0;
  std::string error;  // empty on success
};

inline constexpr const char* kCsvHeader =
    "dataset,algorithm,k,M,p,trial,seed,cc,relative,queries,ms";

// Throws std::invalid_argument when the configuration is unusable (no
// datasets, unknown algorithm, trials < 1, non-positive M).
void ValidateConfig(const ExperimentConfig& config);

RunSeeds CellSeeds(std::uint64_t base_seed, const std::string& dataset,
                   const std::string& algorithm, const std::string& budget,
                   double p, int trial);

// Full factorial run. Rows come out in (dataset, algorithm, M, p, trial)
// order regardless of threads. A failing cell yields a row with `error`
// set and NaN scores; the remaining cells still run.
std::vector<ExperimentRecord> RunExperiment(const ExperimentConfig& config);

std::string FormatBudget(double budget);
std::string FormatNumber(double value);
void WriteCsv(std::ostream& out, const std::vector<ExperimentRecord>& rows);

struct CellSummary {
  std::string dataset;
  std::string algorithm;
  std::string budget;
  double p = 0.0;
  int runs = 0;
  double cc_mean = 0.0;
  double cc_sd = 0.0;
  double relative_mean = 0.0;
  double relative_sd = 0.0;
};

// Mean and sample standard deviation per (dataset, algorithm, M, p), over
// successful trials, in first-appearance order.
std::vector<CellSummary> Summarize(const std::vector<ExperimentRecord>& rows);
void WriteSummaryCsv(std::ostream& out,
                     const std::vector<CellSummary>& summary);

// Bar chart of absolute CC per dataset and complete-information algorithm.
void WriteScorePlot(std::ostream& out,
                    const std::vector<CellSummary>& summary);
// Relative score against M, one series per (algorithm, p).
void WriteRelativePlot(std::ostream& out,
                       const std::vector<CellSummary>& summary);

}  // namespace divcom::tools

#endif  // DIVCOM_TOOLS_EXPERIMENT_H_
